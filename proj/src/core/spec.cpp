#include <charconv>
#include <sstream>

#include "grr/core.hpp"
#include "grr/families.hpp"

#include "json.hpp"

namespace grr {

namespace {

uint32_t parse_u32(std::string_view s, const std::string& what) {
  uint32_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ArgumentError("bad " + what + " \"" + std::string(s) + "\"");
  return v;
}

std::vector<uint32_t> parse_u32_list(std::string_view s, const std::string& what) {
  std::vector<uint32_t> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok =
        comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    out.push_back(parse_u32(tok, what));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

GroupPtr make_group(const std::string& spec) {
  std::string name = spec;
  std::string arg;
  if (size_t colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  const bool has_arg = !arg.empty();

  using namespace families;
  if (name == "cyclic" && has_arg) return cyclic(parse_u32(arg, "cyclic order"));
  if (name == "abelian" && has_arg)
    return abelian(parse_u32_list(arg, "abelian modulus"));
  if (name == "elementary2" && has_arg)
    return elementary2(parse_u32(arg, "elementary2 rank"));
  if (name == "dihedral" && has_arg) return dihedral(parse_u32(arg, "dihedral order"));
  if (name == "gendihedral" && has_arg)
    return generalized_dihedral(parse_u32_list(arg, "gendihedral modulus"));
  if (name == "gendicyclic" && has_arg)
    return generalized_dicyclic(parse_u32_list(arg, "gendicyclic modulus"));
  if (name == "sym" && has_arg) return symmetric(parse_u32(arg, "sym degree"));
  if (name == "heisenberg")
    return has_arg ? heisenberg_mod(parse_u32(arg, "heisenberg modulus")) : heisenberg();
  if (name == "free" && has_arg) return free_group(parse_u32(arg, "free rank"));
  if (name == "zd" && has_arg) return zd(parse_u32(arg, "zd dimension"));
  if (has_arg) throw ArgumentError("unknown group spec \"" + spec + "\"");

  if (name == "q8") return quaternion8();
  if (name == "a4") return alternating4();
  if (name == "pauli16") return pauli16();
  if (name == "modular16") return modular16();
  if (name == "d4od4") return d4_central_product();
  if (name == "presented16a") return presented16a();
  if (name == "presented16b") return presented16b();
  if (name == "presented32") return presented32();
  if (name == "q8xc3") return direct_product(quaternion8(), cyclic(3), "q8xc3");
  if (name == "q8xc4") return direct_product(quaternion8(), cyclic(4), "q8xc4");
  if (name == "lamplighter") return lamplighter();
  if (name == "dinf") return infinite_dihedral();
  if (name == "grigorchuk") return grigorchuk();
  throw ArgumentError("unknown group spec \"" + spec + "\"");
}

GroupPtr group_from_table_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad table JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
    throw IoError("table JSON needs a \"table\" array");
  std::vector<std::vector<uint32_t>> table;
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw IoError("table rows must be arrays");
    std::vector<uint32_t> r;
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) throw IoError("table entries must be indices");
      r.push_back(v.get<uint32_t>());
    }
    table.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& v : j["names"]) {
      if (!v.is_string()) throw IoError("names must be strings");
      names.push_back(v.get<std::string>());
    }
  }
  std::vector<uint32_t> gens;
  if (j.contains("gens")) {
    for (const auto& v : j["gens"]) {
      if (!v.is_number_unsigned()) throw IoError("gens must be indices");
      gens.push_back(v.get<uint32_t>());
    }
  }
  try {
    return families::from_table(table, std::move(names), std::move(gens));
  } catch (const ArgumentError& e) {
    throw IoError(e.what());
  }
}

GroupPtr group_from_permutation_text(const std::string& text) {
  // One generator per line; 1-based points. Either cycles "(1 2)(3 4)" or a
  // full image row "2 1 4 3".
  struct RawPerm {
    bool cycles;
    std::vector<std::vector<uint32_t>> cyc;
    std::vector<uint32_t> images;
  };
  std::vector<RawPerm> raws;
  uint32_t degree = 0;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);

    RawPerm raw;
    if (line[0] == '(') {
      raw.cycles = true;
      size_t pos = 0;
      while (pos < line.size()) {
        if (line[pos] != '(') throw IoError("bad cycle notation: " + line);
        size_t close = line.find(')', pos);
        if (close == std::string::npos) throw IoError("unclosed cycle: " + line);
        std::istringstream cy(line.substr(pos + 1, close - pos - 1));
        std::vector<uint32_t> cycle;
        std::string tok;
        while (cy >> tok) {
          uint32_t p = parse_u32(tok, "cycle point");
          if (p == 0) throw IoError("points are 1-based: " + line);
          cycle.push_back(p - 1);
          degree = std::max(degree, p);
        }
        if (cycle.size() < 2) throw IoError("cycles need at least two points: " + line);
        raw.cyc.push_back(std::move(cycle));
        pos = close + 1;
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      }
    } else if (line == "e") {
      raw.cycles = true;  // identity: empty cycle list
    } else {
      raw.cycles = false;
      std::istringstream im(line);
      std::string tok;
      while (im >> tok) {
        uint32_t p = parse_u32(tok, "permutation image");
        if (p == 0) throw IoError("points are 1-based: " + line);
        raw.images.push_back(p - 1);
        degree = std::max(degree, p);
      }
      degree = std::max(degree, static_cast<uint32_t>(raw.images.size()));
    }
    raws.push_back(std::move(raw));
  }
  if (raws.empty()) throw IoError("no permutations given");
  if (degree == 0) degree = 1;

  std::vector<std::vector<uint32_t>> gens;
  for (const RawPerm& raw : raws) {
    std::vector<uint32_t> p(degree);
    for (uint32_t i = 0; i < degree; ++i) p[i] = i;
    if (raw.cycles) {
      for (const auto& cyc : raw.cyc)
        for (size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    } else {
      if (raw.images.size() != degree)
        throw IoError("image row length disagrees with the degree");
      p = raw.images;
    }
    gens.push_back(std::move(p));
  }
  try {
    return families::from_permutations(gens, "", 4096);
  } catch (const ArgumentError& e) {
    throw IoError(e.what());
  }
}

}  // namespace grr
