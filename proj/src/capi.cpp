#include "diskhitter/diskhitter.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "diskhitter/decomposition.hpp"
#include "diskhitter/instance_io.hpp"
#include "diskhitter/oracle.hpp"
#include "diskhitter/pipeline.hpp"
#include "json.hpp"

struct dh_instance {
  dh::SolveInput input;
};

struct dh_report {
  dh::SolveReport report;
  dh::Problem problem;
  dh::Mode mode;
};

namespace {

thread_local std::string last_error;

dh_status fail(dh_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
dh_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return DH_OK;
  } catch (const dh::ParseError& e) {
    return fail(DH_ERR_PARSE, e.what());
  } catch (const dh::TooLarge& e) {
    return fail(DH_ERR_TOO_LARGE, e.what());
  } catch (const dh::GenerationStalled& e) {
    return fail(DH_ERR_STALLED, e.what());
  } catch (const dh::InvalidArgument& e) {
    return fail(DH_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DH_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

dh::Problem to_problem(dh_problem p) {
  switch (p) {
    case DH_THS: return dh::Problem::Ths;
    case DH_FVS: return dh::Problem::Fvs;
    case DH_OCT: return dh::Problem::Oct;
  }
  throw dh::InvalidArgument("unknown problem");
}

// The instance as seen by one call: disks are dropped in robust mode.
dh::SolveInput view(const dh_instance* inst, bool robust) {
  dh::SolveInput in = inst->input;
  if (robust) in.disks.reset();
  return in;
}

void require(const void* p, const char* what) {
  if (!p) throw dh::InvalidArgument(std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* dh_last_error(void) { return last_error.c_str(); }

const char* dh_status_name(dh_status status) {
  switch (status) {
    case DH_OK: return "ok";
    case DH_ERR_ARGUMENT: return "invalid argument";
    case DH_ERR_PARSE: return "parse error";
    case DH_ERR_IO: return "i/o error";
    case DH_ERR_TOO_LARGE: return "too large";
    case DH_ERR_STALLED: return "generation stalled";
    case DH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

dh_status dh_parse_problem(const char* name, dh_problem* out) {
  return guarded([&] {
    require(name, "problem name");
    require(out, "output");
    switch (dh::parse_problem(name)) {
      case dh::Problem::Ths: *out = DH_THS; break;
      case dh::Problem::Fvs: *out = DH_FVS; break;
      case dh::Problem::Oct: *out = DH_OCT; break;
    }
  });
}

void dh_string_free(char* s) { std::free(s); }

dh_status dh_instance_read(const char* path, dh_instance** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new dh_instance{dh::read_instance(path)};
  });
}

dh_status dh_instance_parse(const char* json, dh_instance** out) {
  return guarded([&] {
    require(json, "text");
    require(out, "output");
    *out = new dh_instance{dh::parse_instance(json)};
  });
}

dh_status dh_instance_generate(int n, int ply, uint64_t seed, dh_instance** out) {
  return guarded([&] {
    require(out, "output");
    *out = new dh_instance{dh::from_disks(dh::random_instance(n, ply, seed))};
  });
}

dh_status dh_instance_write(const dh_instance* inst, const char* path) {
  const dh_status s = guarded([&] {
    require(inst, "instance");
    require(path, "path");
    dh::write_text(path, dh::dump_instance(inst->input));
  });
  return s == DH_ERR_INTERNAL ? DH_ERR_IO : s;
}

dh_status dh_instance_json(const dh_instance* inst, char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "output");
    *out = copy_out(dh::dump_instance(inst->input));
  });
}

int dh_instance_vertex_count(const dh_instance* inst) { return inst ? inst->input.graph.alive_count() : 0; }

int dh_instance_is_geometric(const dh_instance* inst) { return inst && inst->input.disks ? 1 : 0; }

void dh_instance_free(dh_instance* inst) { delete inst; }

void dh_solve_options_init(dh_solve_options* opts) {
  if (!opts) return;
  *opts = dh_solve_options{};
  opts->problem = DH_THS;
  opts->jobs = 1;
}

dh_status dh_select_p(dh_problem problem, int k, int robust, int* out) {
  return guarded([&] {
    require(out, "output");
    *out = dh::select_p(to_problem(problem), k, robust ? dh::Mode::Robust : dh::Mode::Geometric);
  });
}

dh_status dh_solve(const dh_instance* inst, int k, const dh_solve_options* opts, dh_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(opts, "options");
    require(out, "output");
    if (opts->jobs < 1) throw dh::InvalidArgument("jobs must be at least 1");
    const auto input = view(inst, opts->robust != 0);
    dh::SolveConfig c;
    c.problem = to_problem(opts->problem);
    c.mode = input.disks ? dh::Mode::Geometric : dh::Mode::Robust;
    c.p = opts->p;
    c.seed = opts->seed;
    c.jobs = opts->jobs;
    c.state_cap = opts->state_cap;
    *out = new dh_report{dh::solve(input, k, c), c.problem, c.mode};
  });
}

dh_answer dh_report_answer(const dh_report* rep) {
  if (!rep) return DH_UNKNOWN;
  switch (rep->report.answer) {
    case dh::Answer::Yes: return DH_YES;
    case dh::Answer::No: return DH_NO;
    case dh::Answer::Unknown: return DH_UNKNOWN;
  }
  return DH_UNKNOWN;
}

size_t dh_report_solution(const dh_report* rep, int32_t* ids, size_t cap) {
  if (!rep) return 0;
  const auto& s = rep->report.solution;
  for (size_t i = 0; i < s.size() && i < cap && ids; ++i) ids[i] = s[i];
  return s.size();
}

dh_status dh_report_json(const dh_report* rep, char** out) {
  return guarded([&] {
    require(rep, "report");
    require(out, "output");
    const auto& r = rep->report;
    nlohmann::ordered_json j;
    j["answer"] = std::string(dh::to_string(r.answer));
    j["problem"] = std::string(dh::to_string(rep->problem));
    j["mode"] = std::string(dh::to_string(rep->mode));
    j["k"] = r.k;
    j["p"] = r.p;
    j["solution"] = r.solution;
    j["certified"] = r.certified;
    j["instances_explored"] = r.instances_explored;
    j["kernel_sizes"] = r.kernel_sizes;
    j["widths"] = r.widths;
    j["short_circuits"] = r.short_circuits;
    j["overflows"] = r.overflows;
    j["robust_retries"] = r.robust_retries;
    j["cleaning_skipped"] = r.cleaning_skipped;
    j["wall_seconds"] = r.wall_seconds;
    *out = copy_out(j.dump(2) + "\n");
  });
}

void dh_report_free(dh_report* rep) { delete rep; }

dh_status dh_verify(const dh_instance* inst, dh_problem problem, const int32_t* ids, size_t count, int k,
                    int* certified) {
  return guarded([&] {
    require(inst, "instance");
    require(certified, "output");
    if (count) require(ids, "ids");
    const std::vector<dh::Vertex> s(ids, ids + count);
    *certified = dh::certify_solution(to_problem(problem), inst->input.graph, s, k) ? 1 : 0;
  });
}

dh_status dh_verify_file(const dh_instance* inst, dh_problem problem, const char* solution_path, int k,
                         int* certified) {
  return guarded([&] {
    require(inst, "instance");
    require(solution_path, "path");
    require(certified, "output");
    const auto s = dh::read_solution(solution_path);
    *certified = dh::certify_solution(to_problem(problem), inst->input.graph, s, k) ? 1 : 0;
  });
}

dh_status dh_oracle(const dh_instance* inst, dh_problem problem, int kmax, int* optimum, char** json) {
  return guarded([&] {
    require(inst, "instance");
    if (kmax < 0) throw dh::InvalidArgument("kmax must be non-negative");
    const auto r = dh::brute_force(to_problem(problem), inst->input.graph, kmax);
    if (optimum) *optimum = r.optimum ? *r.optimum : -1;
    if (json) {
      nlohmann::ordered_json j;
      j["optimum"] = r.optimum ? nlohmann::ordered_json(*r.optimum) : nlohmann::ordered_json(nullptr);
      j["witness"] = r.witness;
      j["enumerated"] = r.enumerated;
      *json = copy_out(j.dump() + "\n");
    }
  });
}

dh_status dh_stats(const dh_instance* inst, int robust, int k, int p, const char* td_path, char** csv) {
  return guarded([&] {
    require(inst, "instance");
    require(csv, "output");
    if (p != 0 && p < 3) throw dh::InvalidArgument("p must be at least 3");
    const auto input = view(inst, robust != 0);
    const auto& g = input.graph;
    const auto td = input.disks ? dh::build_td(g, *input.disks) : dh::robust_td(g);
    if (td_path) dh::write_text(td_path, dh::to_pace(td, g.capacity()));

    std::ostringstream out;
    out << "n,m,ply,weighted_width,width,bags,k,p,instances,kernel_direct,kernel_mean,kernel_max\n";
    out << g.alive_count() << ',' << g.edge_count() << ',';
    if (input.disks) out << dh::ply(*input.disks);
    out << ',' << dh::weighted_width(td) << ',' << dh::td_width(td) << ',' << td.node_count() << ',';
    if (k >= 0) {
      const dh::Mode mode = input.disks ? dh::Mode::Geometric : dh::Mode::Robust;
      const int chosen = p ? p : dh::select_p(dh::Problem::Ths, k, mode);
      const auto prof = dh::kernel_profile(input, k, chosen, mode);
      out << k << ',' << chosen << ',' << prof.instances << ',' << prof.direct_kernel << ',' << prof.mean_kernel
          << ',' << prof.max_kernel;
    } else {
      out << ",,,,,";
    }
    out << '\n';
    *csv = copy_out(out.str());
  });
}

}  // extern "C"
