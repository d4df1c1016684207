#include "nnn/nnn.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <sstream>
#include <string>

#include "nnn/error.hpp"
#include "nnn/serialize.hpp"

struct nnn_group {
  nnn::GroupSpec spec;
};

struct nnn_digraph {
  nnn::CayleyDigraph cay;
};

struct nnn_sweep {
  nnn::GroupSpec group;
  std::vector<nnn::Classification> records;
};

struct nnn_report {
  nnn::VerifyReport report;
};

namespace {

thread_local std::string last_error;

nnn_status fail(nnn_status status, const char* what) {
  last_error = what;
  return status;
}

template <class F>
nnn_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return NNN_OK;
  } catch (const nnn::InvalidArgument& e) {
    return fail(NNN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const nnn::PreconditionError& e) {
    return fail(NNN_ERR_PRECONDITION, e.what());
  } catch (const nnn::CapExceeded& e) {
    return fail(NNN_ERR_CAP_EXCEEDED, e.what());
  } catch (const nnn::InternalError& e) {
    return fail(NNN_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NNN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NNN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NNN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NNN_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) throw nnn::InvalidArgument(std::string(what) + " is null");
}

std::vector<std::uint32_t> parse_set(const nnn::GroupSpec& g, std::string_view text, bool symbolic) {
  std::vector<std::uint32_t> codes;
  if (text.find_first_not_of(' ') == std::string_view::npos) return codes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    pos = comma + 1;
    if (token.empty()) throw nnn::InvalidArgument("empty element in set");
    if (symbolic) {
      codes.push_back(nnn::parse_elem(g, token).code);
      continue;
    }
    std::uint32_t value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw nnn::InvalidArgument("not an element code: " + std::string(token));
      value = value * 10 + static_cast<std::uint32_t>(c - '0');
      if (value > 1u << 20) throw nnn::InvalidArgument("element code out of range: " + std::string(token));
    }
    codes.push_back(value);
  }
  return codes;
}

std::function<void(const nnn::GroupSpec&, std::size_t, std::size_t)> progress_adapter(
    nnn_progress_fn fn, void* user) {
  if (!fn) return {};
  return [fn, user](const nnn::GroupSpec& g, std::size_t done, std::size_t total) {
    fn(g.name().c_str(), done, total, user);
  };
}

}  // namespace

extern "C" {

const char* nnn_version(void) { return "1.0.0"; }

const char* nnn_status_name(nnn_status status) {
  switch (status) {
    case NNN_OK: return "ok";
    case NNN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NNN_ERR_PRECONDITION: return "precondition violated";
    case NNN_ERR_CAP_EXCEEDED: return "cap exceeded";
    case NNN_ERR_INTERNAL: return "internal error";
    case NNN_ERR_IO: return "i/o error";
  }
  return "unknown status";
}

const char* nnn_last_error(void) { return last_error.c_str(); }

void nnn_string_free(char* s) { std::free(s); }

nnn_status nnn_group_create(nnn_family family, int n, nnn_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (family != NNN_CYCLIC && family != NNN_DIHEDRAL) throw nnn::InvalidArgument("unknown family");
    const auto spec = family == NNN_CYCLIC ? nnn::GroupSpec::cyclic(n) : nnn::GroupSpec::dihedral(n);
    *out = new nnn_group{spec};
  });
}

nnn_status nnn_group_parse(const char* text, nnn_group** out) {
  return guarded([&] {
    require(out, "out");
    require(text, "text");
    *out = nullptr;
    *out = new nnn_group{nnn::parse_group(text)};
  });
}

void nnn_group_destroy(nnn_group* g) { delete g; }

int nnn_group_order(const nnn_group* g) { return g ? g->spec.order() : 0; }

nnn_status nnn_group_name(const nnn_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = copy_string(g->spec.name());
  });
}

nnn_status nnn_group_parse_set(const nnn_group* g, const char* text, int symbolic, uint32_t* codes,
                               size_t capacity, size_t* count) {
  return guarded([&] {
    require(g, "group");
    require(text, "text");
    require(count, "count");
    const nnn::ElemSet set = nnn::make_set(g->spec, parse_set(g->spec, text, symbolic != 0));
    *count = set.size();
    if (set.size() > capacity) throw nnn::CapExceeded("set buffer too small");
    if (!set.empty()) require(codes, "codes");
    for (std::size_t i = 0; i < set.size(); ++i) codes[i] = set[i].code;
  });
}

nnn_status nnn_group_format_element(const nnn_group* g, uint32_t code, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = copy_string(nnn::format_elem(g->spec, nnn::GroupElem{code}));
  });
}

nnn_status nnn_digraph_create(const nnn_group* g, const uint32_t* codes, size_t count,
                              nnn_digraph** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = nullptr;
    if (count > 0) require(codes, "codes");
    std::vector<std::uint32_t> v(codes, codes + count);
    *out = new nnn_digraph{nnn::CayleyDigraph(g->spec, nnn::make_set(g->spec, v))};
  });
}

nnn_status nnn_digraph_from_json(const char* json, nnn_digraph** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    nnn::Json j;
    try {
      j = nnn::Json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw nnn::InvalidArgument(std::string("bad JSON: ") + e.what());
    }
    *out = new nnn_digraph{nnn::digraph_from_json(j)};
  });
}

void nnn_digraph_destroy(nnn_digraph* d) { delete d; }

nnn_status nnn_digraph_to_json(const nnn_digraph* d, char** out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = copy_string(nnn::dump_line(nnn::to_json(d->cay)));
  });
}

nnn_status nnn_digraph_edge_list(const nnn_digraph* d, char** out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = copy_string(nnn::edge_list(d->cay));
  });
}

nnn_status nnn_classify(const nnn_digraph* d, char** json_out) {
  return guarded([&] {
    require(d, "digraph");
    require(json_out, "out");
    const auto c = nnn::classify(d->cay.group(), d->cay.connection_set());
    *json_out = copy_string(nnn::dump_line(nnn::to_json(c)));
  });
}

nnn_status nnn_automorphisms(const nnn_digraph* d, char** json_out) {
  return guarded([&] {
    require(d, "digraph");
    require(json_out, "out");
    *json_out = copy_string(nnn::dump_line(nnn::to_json(nnn::automorphism_group(d->cay))));
  });
}

nnn_status nnn_construct_dihedral_nnn(int n, char** json_out) {
  return guarded([&] {
    require(json_out, "out");
    const nnn::GroupSpec g = nnn::GroupSpec::dihedral(n);
    const nnn::ElemSet s = nnn::dihedral_nnn_set(n);
    nnn::Json j;
    j["group"] = nnn::to_json(g);
    j["set"] = nnn::to_json(s);
    j["witness"] = nnn::to_json(nnn::dihedral_nnn_witness(n));
    j["witness_check"] = nnn::to_json(nnn::check_dihedral_witness(n));
    j["classification"] = nnn::to_json(nnn::classify(g, s));
    *json_out = copy_string(nnn::dump_line(j));
  });
}

nnn_status nnn_sweep_run(const nnn_group* g, nnn_sweep_mode mode, int reduce, unsigned jobs,
                         nnn_progress_fn progress, void* user, nnn_sweep** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = nullptr;
    if (mode != NNN_SWEEP_DIGRAPH && mode != NNN_SWEEP_GRAPH) throw nnn::InvalidArgument("unknown sweep mode");
    nnn::SweepOptions opts;
    opts.mode = mode == NNN_SWEEP_GRAPH ? nnn::SweepMode::Graph : nnn::SweepMode::Digraph;
    opts.reduce = reduce != 0;
    opts.jobs = jobs == 0 ? 1 : jobs;
    if (progress) {
      const std::string label = g->spec.name();
      opts.progress = [=](std::size_t done, std::size_t total) { progress(label.c_str(), done, total, user); };
    }
    auto records = nnn::sweep(g->spec, opts);
    *out = new nnn_sweep{g->spec, std::move(records)};
  });
}

size_t nnn_sweep_size(const nnn_sweep* s) { return s ? s->records.size() : 0; }

nnn_status nnn_sweep_record_json(const nnn_sweep* s, size_t index, char** out) {
  return guarded([&] {
    require(s, "sweep");
    require(out, "out");
    if (index >= s->records.size()) throw nnn::InvalidArgument("record index out of range");
    *out = copy_string(nnn::dump_line(nnn::to_json(s->records[index])));
  });
}

nnn_status nnn_sweep_summary_json(const nnn_sweep* s, char** out) {
  return guarded([&] {
    require(s, "sweep");
    require(out, "out");
    *out = copy_string(nnn::dump_line(nnn::to_json(nnn::summarize(s->records), s->group)));
  });
}

void nnn_sweep_destroy(nnn_sweep* s) { delete s; }

nnn_status nnn_verify(int theorem, int max_n, unsigned jobs, nnn_progress_fn progress, void* user,
                      nnn_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto report = nnn::verify_theorem(theorem, max_n, jobs == 0 ? 1 : jobs, progress_adapter(progress, user));
    *out = new nnn_report{std::move(report)};
  });
}

int nnn_report_passed(const nnn_report* r) { return r && r->report.passed ? 1 : 0; }

nnn_status nnn_report_json(const nnn_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(nnn::to_json(r->report).dump(2));
  });
}

nnn_status nnn_report_counterexample_json(const nnn_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = nullptr;
    for (const nnn::GroupCheck& c : r->report.groups)
      if (c.counterexample) {
        *out = copy_string(nnn::dump_line(nnn::to_json(*c.counterexample)));
        return;
      }
  });
}

void nnn_report_destroy(nnn_report* r) { delete r; }

}  // extern "C"
