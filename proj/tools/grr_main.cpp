// Command-line front end. Talks to the library exclusively through the C API
// so the shared-library boundary stays exercised.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grr.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CStr {
  char* p = nullptr;
  ~CStr() { grr_free(p); }
};

struct GroupHandle {
  grr_group* g = nullptr;
  ~GroupHandle() { grr_group_close(g); }
};

struct SetHandle {
  grr_genset* s = nullptr;
  ~SetHandle() { grr_genset_close(s); }
};

int fail(grr_status st) {
  std::fprintf(stderr, "error (%s): %s\n", grr_status_name(st), grr_last_error());
  return static_cast<int>(st);
}

int io_fail(const std::string& msg) {
  std::fprintf(stderr, "error (io): %s\n", msg.c_str());
  return static_cast<int>(GRR_ERR_IO);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Empty path = stdout. A single trailing newline is guaranteed.
bool write_output(const std::string& path, const std::string& content) {
  std::string body = content;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (path.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << body;
  return out.good();
}

// Shared flags; every run is reproducible from what ends up in `config`.
struct Opts {
  std::string group;
  std::string table_file;
  std::string perm_file;
  std::string gens_file;
  std::string inline_set;
  std::string out;
  std::string format = "json";
  uint64_t seed = 0;
  uint64_t budget = 0;  // 0 = library default
  uint64_t samples = 100000;
  std::string lengths = "50,100,200";
  int radius = -1;
  bool force = false;
  bool directed = false;
};

void add_group_flags(CLI::App* cmd, Opts& o) {
  auto* spec = cmd->add_option("--group", o.group, "built-in family spec, e.g. q8, dihedral:8");
  auto* table = cmd->add_option("--table", o.table_file, "multiplication-table JSON file");
  auto* perms = cmd->add_option("--perms", o.perm_file, "permutation generator file");
  spec->excludes(table)->excludes(perms);
  table->excludes(perms);
}

void add_set_flags(CLI::App* cmd, Opts& o) {
  auto* gens = cmd->add_option("--gens", o.gens_file, "generating-set file, one element per line");
  auto* inl = cmd->add_option("--set", o.inline_set, "inline generating set, comma-separated");
  gens->excludes(inl);
}

int open_group(const Opts& o, GroupHandle& h) {
  grr_status st;
  if (!o.table_file.empty()) {
    std::string text;
    if (!read_file(o.table_file, text)) return io_fail("cannot read " + o.table_file);
    st = grr_group_from_table_json(text.c_str(), &h.g);
  } else if (!o.perm_file.empty()) {
    std::string text;
    if (!read_file(o.perm_file, text)) return io_fail("cannot read " + o.perm_file);
    st = grr_group_from_permutations(text.c_str(), &h.g);
  } else if (!o.group.empty()) {
    st = grr_group_open(o.group.c_str(), &h.g);
  } else {
    std::fprintf(stderr, "error (argument): one of --group/--table/--perms is required\n");
    return static_cast<int>(GRR_ERR_ARGUMENT);
  }
  return st == GRR_OK ? 0 : fail(st);
}

// nullptr when neither --gens nor --set was given (commands fall back to the
// symmetrized default generators; probe passes NULL through).
int open_set(const Opts& o, const GroupHandle& g, SetHandle& h, bool default_if_missing) {
  std::string text;
  if (!o.gens_file.empty()) {
    if (!read_file(o.gens_file, text)) return io_fail("cannot read " + o.gens_file);
  } else if (!o.inline_set.empty()) {
    text = o.inline_set;
    for (char& c : text)
      if (c == ',') c = '\n';
  } else {
    if (!default_if_missing) return 0;
    grr_status st = grr_genset_default(g.g, &h.s);
    return st == GRR_OK ? 0 : fail(st);
  }
  grr_status st = grr_genset_parse(g.g, text.c_str(), &h.s);
  return st == GRR_OK ? 0 : fail(st);
}

json config_json(const std::string& command, const Opts& o) {
  json c;
  c["command"] = command;
  if (!o.group.empty()) c["group"] = o.group;
  if (!o.table_file.empty()) c["table"] = o.table_file;
  if (!o.perm_file.empty()) c["perms"] = o.perm_file;
  if (!o.gens_file.empty()) c["gens"] = o.gens_file;
  if (!o.inline_set.empty()) c["set"] = o.inline_set;
  c["seed"] = o.seed;
  c["format"] = o.format;
  return c;
}

int emit_json(const Opts& o, const char* text, const json& config) {
  json j = json::parse(text);
  j["config"] = config;
  if (!write_output(o.out, j.dump(2))) return io_fail("cannot write " + o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-graph regularity toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", grr_version());

  Opts o;
  std::string kind;      // classify
  std::string mode = "grr";       // verify
  std::string quantity = "commute";  // probe
  std::string set_out;   // construct

  CLI::App* c_classify = app.add_subcommand("classify", "exception-list verdicts for a group");
  add_group_flags(c_classify, o);
  c_classify->add_option("--kind", kind, "grr|drr|orr (default: all three)");
  c_classify->add_option("--out", o.out, "output file (default stdout)");
  c_classify->add_option("--format", o.format, "json");

  CLI::App* c_construct = app.add_subcommand("construct", "run the generating-set pipeline");
  add_group_flags(c_construct, o);
  add_set_flags(c_construct, o);
  c_construct->add_option("--budget", o.budget, "augmentation candidate budget per step");
  c_construct->add_flag("--force", o.force, "skip the virtually-abelian refusal gate");
  c_construct->add_option("--out", o.out, "trace JSON file (default stdout)");
  c_construct->add_option("--set-out", set_out, "write the final set, one element per line");
  c_construct->add_option("--format", o.format, "json");

  CLI::App* c_verify = app.add_subcommand("verify", "regularity / rigidity of a concrete set");
  add_group_flags(c_verify, o);
  add_set_flags(c_verify, o);
  c_verify->add_option("--mode", mode, "grr|drr|orr|rigidity");
  c_verify->add_option("--out", o.out, "output file (default stdout)");
  c_verify->add_option("--format", o.format, "json");

  CLI::App* c_probe = app.add_subcommand("probe", "random-walk estimates on a group");
  add_group_flags(c_probe, o);
  add_set_flags(c_probe, o);
  c_probe->add_option("--quantity", quantity, "commute|square|coset|involution|cover");
  c_probe->add_option("--n", o.lengths, "walk lengths, comma-separated");
  c_probe->add_option("--samples", o.samples, "Monte Carlo sample count");
  c_probe->add_option("--seed", o.seed, "random seed (outputs are seed-deterministic)");
  c_probe->add_option("--radius", o.radius, "cover scope radius (-1 = whole group)");
  c_probe->add_option("--out", o.out, "output file (default stdout)");
  c_probe->add_option("--format", o.format, "json|csv");

  CLI::App* c_export = app.add_subcommand("export", "write the Cayley (di)graph");
  add_group_flags(c_export, o);
  add_set_flags(c_export, o);
  c_export->add_flag("--directed", o.directed, "build the digraph");
  c_export->add_option("--radius", o.radius, "ball radius (-1 = whole group, finite only)");
  c_export->add_option("--out", o.out, "output file (default stdout)");
  c_export->add_option("--format", o.format, "dot|json");

  CLI11_PARSE(app, argc, argv);

  GroupHandle g;
  if (int rc = open_group(o, g)) return rc;

  if (c_classify->parsed()) {
    if (o.format != "json") return io_fail("classify supports --format json only");
    json config = config_json("classify", o);
    if (!kind.empty()) {
      config["kind"] = kind;
      CStr out;
      grr_status st = grr_classify(g.g, kind.c_str(), &out.p);
      if (st != GRR_OK) return fail(st);
      return emit_json(o, out.p, config);
    }
    json j;
    for (const char* k : {"grr", "drr", "orr"}) {
      CStr out;
      grr_status st = grr_classify(g.g, k, &out.p);
      if (st != GRR_OK) return fail(st);
      json one = json::parse(out.p);
      j["group"] = one["group"];
      one.erase("group");
      j[k] = one;
    }
    j["config"] = config;
    if (!write_output(o.out, j.dump(2))) return io_fail("cannot write " + o.out);
    return 0;
  }

  if (c_construct->parsed()) {
    if (o.format != "json") return io_fail("construct supports --format json only");
    SetHandle s;
    if (int rc = open_set(o, g, s, /*default_if_missing=*/true)) return rc;
    CStr trace_text, set_text;
    grr_status st = grr_construct(s.s, o.budget, o.force ? 1 : 0, &trace_text.p, &set_text.p);
    json config = config_json("construct", o);
    config["budget"] = o.budget;
    config["force"] = o.force;
    // Partial traces are still written when the search gave up (exit 3).
    if (trace_text.p != nullptr) {
      if (int rc = emit_json(o, trace_text.p, config)) return rc;
      if (!set_out.empty() && set_text.p != nullptr &&
          !write_output(set_out, set_text.p))
        return io_fail("cannot write " + set_out);
    }
    return st == GRR_OK ? 0 : fail(st);
  }

  if (c_verify->parsed()) {
    if (o.format != "json") return io_fail("verify supports --format json only");
    SetHandle s;
    if (int rc = open_set(o, g, s, /*default_if_missing=*/true)) return rc;
    CStr out;
    grr_status st = grr_verify(s.s, mode.c_str(), &out.p);
    if (st != GRR_OK) return fail(st);
    json config = config_json("verify", o);
    config["mode"] = mode;
    return emit_json(o, out.p, config);
  }

  if (c_probe->parsed()) {
    SetHandle s;
    if (int rc = open_set(o, g, s, /*default_if_missing=*/false)) return rc;
    CStr out;
    grr_status st = grr_probe(g.g, s.s, quantity.c_str(), o.lengths.c_str(), o.samples,
                              o.seed, o.radius, &out.p);
    if (st != GRR_OK) return fail(st);
    json config = config_json("probe", o);
    config["quantity"] = quantity;
    config["n"] = o.lengths;
    config["samples"] = o.samples;
    config["radius"] = o.radius;
    if (o.format == "json") return emit_json(o, out.p, config);
    if (o.format != "csv") return io_fail("probe supports --format json or csv");
    json j = json::parse(out.p);
    std::ostringstream csv;
    csv << "# " << config.dump() << "\n";
    if (j.contains("estimates")) {
      csv << "n,value,radius,samples,exact\n";
      for (size_t i = 0; i < j["estimates"].size(); ++i) {
        const json& e = j["estimates"][i];
        csv << j["lengths"][i].get<uint64_t>() << ',' << e["value"].dump() << ','
            << e["radius"].dump() << ',' << e["samples"].get<uint64_t>() << ','
            << (e["exact"].get<bool>() ? 1 : 0) << "\n";
      }
      csv << "# trend_verdict," << j["trend_verdict"].get<std::string>() << "\n";
    } else {
      const json& c = j["cover"];
      csv << "covers,alpha,alpha_complete,scope_size\n";
      csv << (c["covers"].get<bool>() ? 1 : 0) << ',' << c["alpha"].dump() << ','
          << (c["alpha_complete"].get<bool>() ? 1 : 0) << ','
          << c["scope_size"].get<uint64_t>() << "\n";
    }
    if (!write_output(o.out, csv.str())) return io_fail("cannot write " + o.out);
    return 0;
  }

  if (c_export->parsed()) {
    SetHandle s;
    if (int rc = open_set(o, g, s, /*default_if_missing=*/true)) return rc;
    if (o.format != "dot" && o.format != "json")
      return io_fail("export supports --format dot or json");
    CStr out;
    grr_status st =
        grr_export_graph(s.s, o.directed ? 1 : 0, o.radius, o.format.c_str(), &out.p);
    if (st != GRR_OK) return fail(st);
    json config = config_json("export", o);
    config["directed"] = o.directed;
    config["radius"] = o.radius;
    if (o.format == "json") return emit_json(o, out.p, config);
    std::string dot = "// ";
    dot += config.dump();
    dot += "\n";
    dot += out.p;
    if (!write_output(o.out, dot)) return io_fail("cannot write " + o.out);
    return 0;
  }

  return 0;
}
