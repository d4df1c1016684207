// Command-line front end over the C interface.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nnn/nnn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Failure {
  nnn_status status;
  std::string message;
};

void check(nnn_status s) {
  if (s != NNN_OK) throw Failure{s, nnn_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  nnn_string_free(s);
  return out;
}

struct GroupDeleter {
  void operator()(nnn_group* g) const { nnn_group_destroy(g); }
};
struct DigraphDeleter {
  void operator()(nnn_digraph* d) const { nnn_digraph_destroy(d); }
};
struct SweepDeleter {
  void operator()(nnn_sweep* s) const { nnn_sweep_destroy(s); }
};
struct ReportDeleter {
  void operator()(nnn_report* r) const { nnn_report_destroy(r); }
};
using GroupPtr = std::unique_ptr<nnn_group, GroupDeleter>;
using DigraphPtr = std::unique_ptr<nnn_digraph, DigraphDeleter>;

unsigned default_jobs() {
  if (const char* env = std::getenv("NNN_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 256) return static_cast<unsigned>(v);
    std::fprintf(stderr, "warning: ignoring NNN_JOBS=%s\n", env);
  }
  return 1;
}

GroupPtr open_group(const std::string& text) {
  nnn_group* g = nullptr;
  check(nnn_group_parse(text.c_str(), &g));
  return GroupPtr(g);
}

DigraphPtr open_digraph(const std::string& group, const std::string& set, bool symbolic) {
  GroupPtr g = open_group(group);
  std::vector<uint32_t> codes(static_cast<std::size_t>(nnn_group_order(g.get())) + 1);
  std::size_t count = 0;
  check(nnn_group_parse_set(g.get(), set.c_str(), symbolic ? 1 : 0, codes.data(), codes.size(), &count));
  nnn_digraph* d = nullptr;
  check(nnn_digraph_create(g.get(), codes.data(), count, &d));
  return DigraphPtr(d);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::out | std::ios::trunc);
    if (!file_) throw Failure{NNN_ERR_IO, "cannot open " + path + " for writing"};
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw Failure{NNN_ERR_IO, "write failed"};
  }

 private:
  std::ofstream file_;
};

struct ProgressState {
  bool enabled = true;
  std::size_t last_percent = 101;
  std::string last_label;
};

void report_progress(const char* label, std::size_t done, std::size_t total, void* user) {
  auto* st = static_cast<ProgressState*>(user);
  if (!st->enabled || total == 0) return;
  const std::size_t percent = done * 100 / total;
  if (label == st->last_label && percent / 10 == st->last_percent / 10 && done != total) return;
  st->last_label = label;
  st->last_percent = percent;
  std::fprintf(stderr, "[%s] %zu/%zu\n", label, done, total);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal Cayley digraphs with non-normal regular subgroups on cyclic and dihedral groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nnn_version()));

  std::string group, set, out;
  bool symbolic = false;
  bool edges = false;
  bool quiet = false;
  bool dihedral_nnn = false;
  int n = 0;
  std::string mode = "digraph";
  bool reduce = false;
  unsigned jobs = default_jobs();
  int theorem = 0;
  int max_n = 0;
  bool json_report = false;

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--group,-g", group, "cyclic:N or dihedral:N")->required();
    cmd->add_option("--set,-s", set, "comma-separated element codes (dihedral a^i b is n+i)")->required();
    cmd->add_flag("--symbolic", symbolic, "read the set as words such as a^3*b");
  };

  CLI::App* classify = app.add_subcommand("classify", "classify one Cayley digraph");
  add_instance(classify);
  classify->add_option("--out,-o", out, "output file (default stdout)");

  CLI::App* aut = app.add_subcommand("aut", "automorphism group of one Cayley digraph");
  add_instance(aut);
  aut->add_flag("--edges", edges, "print the arc list instead");
  aut->add_option("--out,-o", out, "output file (default stdout)");

  CLI::App* construct = app.add_subcommand("construct", "build the NNN graph on D_2n with its witness");
  construct->add_flag("--dihedral-nnn,--lemma41", dihedral_nnn, "the dihedral NNN construction")->required();
  construct->add_option("--n", n, "rotation order n (even, >= 6, != 8)")->required();
  construct->add_option("--out,-o", out, "output file (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "classify every connection set of a group");
  sweep->add_option("--group,-g", group, "cyclic:N or dihedral:N")->required();
  sweep->add_option("--mode", mode, "digraph or graph")->check(CLI::IsMember({"digraph", "graph"}));
  sweep->add_flag("--reduce", reduce, "one set per Aut(G)-orbit");
  sweep->add_option("--jobs,-j", jobs, "worker threads (default $NNN_JOBS or 1)")->check(CLI::Range(1u, 256u));
  sweep->add_option("--out,-o", out, "JSON-lines output file (default stdout)");
  sweep->add_flag("--quiet,-q", quiet, "no progress on stderr");

  CLI::App* verify = app.add_subcommand("verify", "check the expected verdict table by sweeping");
  verify->add_option("--theorem", theorem, "1 (cyclic) or 2 (dihedral)")->required()->check(CLI::IsMember({1, 2}));
  verify->add_option("--max-n", max_n, "largest n to sweep (default 16 for theorem 1, 8 for theorem 2)");
  verify->add_option("--jobs,-j", jobs, "worker threads (default $NNN_JOBS or 1)")->check(CLI::Range(1u, 256u));
  verify->add_flag("--json", json_report, "print the full report as JSON");
  verify->add_flag("--quiet,-q", quiet, "no progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed() || aut->parsed()) {
      DigraphPtr d = open_digraph(group, set, symbolic);
      char* text = nullptr;
      if (classify->parsed())
        check(nnn_classify(d.get(), &text));
      else if (edges)
        check(nnn_digraph_edge_list(d.get(), &text));
      else
        check(nnn_automorphisms(d.get(), &text));
      Output o(out);
      o.stream() << take(text);
      if (!edges) o.stream() << '\n';
      o.finish();
      return kExitOk;
    }

    if (construct->parsed()) {
      char* text = nullptr;
      check(nnn_construct_dihedral_nnn(n, &text));
      Output o(out);
      o.stream() << take(text) << '\n';
      o.finish();
      return kExitOk;
    }

    ProgressState progress;
    progress.enabled = !quiet;

    if (sweep->parsed()) {
      GroupPtr g = open_group(group);
      nnn_sweep* raw = nullptr;
      check(nnn_sweep_run(g.get(), mode == "graph" ? NNN_SWEEP_GRAPH : NNN_SWEEP_DIGRAPH, reduce ? 1 : 0,
                          jobs, report_progress, &progress, &raw));
      std::unique_ptr<nnn_sweep, SweepDeleter> s(raw);
      Output o(out);
      for (std::size_t i = 0; i < nnn_sweep_size(s.get()); ++i) {
        char* line = nullptr;
        check(nnn_sweep_record_json(s.get(), i, &line));
        o.stream() << take(line) << '\n';
      }
      char* summary = nullptr;
      check(nnn_sweep_summary_json(s.get(), &summary));
      o.stream() << take(summary) << '\n';
      o.finish();
      return kExitOk;
    }

    if (verify->parsed()) {
      if (max_n == 0) max_n = theorem == 1 ? 16 : 8;
      nnn_report* raw = nullptr;
      check(nnn_verify(theorem, max_n, jobs, report_progress, &progress, &raw));
      std::unique_ptr<nnn_report, ReportDeleter> r(raw);
      char* text = nullptr;
      check(nnn_report_json(r.get(), &text));
      const std::string report = take(text);
      if (json_report) std::cout << report << '\n';
      const bool passed = nnn_report_passed(r.get()) != 0;
      std::cout << "theorem " << theorem << " up to n=" << max_n << ": "
                << (passed ? "verified" : "COUNTEREXAMPLE") << '\n';
      if (!passed) {
        char* bad = nullptr;
        check(nnn_report_counterexample_json(r.get(), &bad));
        if (bad)
          std::cout << take(bad) << '\n';
        else if (!json_report)
          std::cout << report << '\n';
        return kExitCounterexample;
      }
      return kExitOk;
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s (%s)\n", f.message.c_str(), nnn_status_name(f.status));
    return f.status == NNN_ERR_INTERNAL ? kExitInternal : kExitUsage;
  }
  return kExitUsage;
}
