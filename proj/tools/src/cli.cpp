#include "curvlab/tools/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "curvlab/error.hpp"
#include "curvlab/report.hpp"
#include "curvlab/ring_file.hpp"
#include "curvlab/tools/invariants.hpp"
#include "curvlab/tools/presets.hpp"
#include "json.hpp"

namespace curvlab::tools {

namespace {

using Json = nlohmann::ordered_json;

int exit_code(Errc code) {
  switch (code) {
    case Errc::kBudgetExceeded:
    case Errc::kGuardExceeded:
      return 3;
    case Errc::kMismatch:
      return 1;
    default:
      return 2;
  }
}

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::vector<std::size_t> parse_sequence(const std::string& text) {
  std::vector<std::size_t> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::kParse, "bad entry '" + item + "' in --reference");
    }
  }
  return out;
}

Json ring_json(const RingSummary& r) {
  return Json{{"e", r.e ? Json(*r.e) : Json(nullptr)},
              {"length", r.length ? Json(*r.length) : Json(nullptr)},
              {"embdim", r.embdim},
              {"ci", r.ci},
              {"dim", r.dim}};
}

Json interval_json(const CurvatureInterval& c) {
  return Json{{"lo", to_string(c.lo)},
              {"hi", to_string(c.hi)},
              {"lo_value", to_double(c.lo)},
              {"hi_value", to_double(c.hi)},
              {"growth", growth_name(c.growth)},
              {"first", c.first},
              {"last", c.last}};
}

std::string interval_text(const CurvatureInterval& c) {
  std::ostringstream os;
  os << "[" << to_string(c.lo) << ", " << to_string(c.hi) << "] ~ [" << to_double(c.lo) << ", " << to_double(c.hi)
     << "] " << growth_name(c.growth) << " (ratios n=" << c.first << ".." << c.last << ")";
  return os.str();
}

class Job {
 public:
  Job(const JobConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {
    ropts_.budget = cfg.budget;
  }

  int run() {
    const std::string& c = cfg_.command;
    if (c == "preset") return preset();
    load_ring();
    if (c == "ring") return ring();
    if (c == "resolve") return resolve_cmd();
    if (c == "betti") return betti();
    if (c == "curv") return curv();
    if (c == "tor") return tor();
    if (c == "ext") return ext();
    if (c == "injcurv") return injcurv();
    if (c == "audit") return audit();
    throw Error(Errc::kInvalidArgument, "unknown command '" + c + "'");
  }

 private:
  void load_ring() { alg_ = build_ring(read_ring_file(cfg_.ring_file)); }

  ModuleRep module_from(const std::string& file) const {
    if (file.empty()) return residue_field(alg_);
    return build_module(alg_, read_module_file(file));
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  Json header() const { return Json{{"schema", 1}, {"command", cfg_.command}}; }

  int ring() {
    const RingSummary s = summarize(*alg_);
    HilbertFunction hf = alg_->hilbert_function(alg_->is_artinian() ? alg_->top_degree() : 8);
    while (alg_->is_artinian() && !hf.values.empty() && hf.values.back() == 0) hf.values.pop_back();
    if (cfg_.json) {
      Json j = header();
      j["ring"] = ring_json(s);
      j["hilbert"] = hf.values;
      j["minimal_relations"] = minimal_generator_count(*alg_);
      emit(j);
      return 0;
    }
    out_ << render_text(s);
    out_ << "hilbert function: " << join(hf.values) << (alg_->is_artinian() ? "" : " ...") << "\n";
    out_ << "minimal relations: " << minimal_generator_count(*alg_) << "\n";
    return 0;
  }

  FreeResolution resolve_module(const ModuleRep& m, std::size_t depth, bool boundaries) const {
    ResolveOptions o = ropts_;
    o.keep_boundaries = boundaries;
    return resolve(m, depth, o);
  }

  int resolve_cmd() {
    const ModuleRep m = module_from(cfg_.module_file);
    const FreeResolution res = resolve_module(m, cfg_.steps, true);
    const auto problem = verify_resolution(res);
    if (cfg_.json) {
      Json j = header();
      j["module"] = m.provenance();
      j["betti"] = res.betti;
      j["syzygy_lengths"] = res.syzygy_lengths;
      j["graded"] = res.graded;
      j["verified"] = !problem;
      if (problem) j["problem"] = *problem;
      emit(j);
    } else {
      out_ << "module: " << m.provenance() << " (length " << m.dim() << ")\n";
      out_ << "n\tbeta_n\tl(syzygy_n)\n";
      for (std::size_t i = 0; i < res.betti.size(); ++i) {
        out_ << i << "\t" << res.betti[i] << "\t" << res.syzygy_lengths[i] << "\n";
      }
      out_ << (problem ? "verification failed: " + *problem : std::string("verified: minimal, exact, d^2 = 0"))
           << "\n";
    }
    return problem ? 1 : 0;
  }

  int betti() {
    const ModuleRep m = module_from(cfg_.module_file);
    const FreeResolution res = resolve_module(m, cfg_.steps, false);
    if (cfg_.json) {
      Json j = header();
      j["module"] = m.provenance();
      j["betti"] = res.betti;
      emit(j);
    } else {
      out_ << join(res.betti) << "\n";
    }
    return 0;
  }

  int curv() {
    const ModuleRep m = module_from(cfg_.module_file);
    const FreeResolution res = resolve_module(m, cfg_.steps, false);
    const CurvatureInterval c = curvature_estimate(res.betti, cfg_.window);
    const bool finite = c.growth == GrowthClass::kFinitePd;
    if (cfg_.json) {
      Json j = header();
      j["module"] = m.provenance();
      j["betti"] = res.betti;
      j["interval"] = interval_json(c);
      if (!finite) {
        const auto roots = root_window(res.betti, cfg_.window);
        j["root_window"] = {roots.first, roots.second};
      }
      emit(j);
    } else {
      out_ << "betti: " << join(res.betti) << "\n";
      out_ << "curvature: " << interval_text(c) << "\n";
      if (!finite) {
        const auto roots = root_window(res.betti, cfg_.window);
        out_ << "root window: [" << roots.first << ", " << roots.second << "]\n";
      }
    }
    return 0;
  }

  int tor() {
    const ModuleRep m = module_from(cfg_.module_file);
    const ModuleRep n = module_from(cfg_.module2_file);
    const TorProfile p = tor_lengths(m, n, cfg_.steps, ropts_);
    if (cfg_.json) {
      Json j = header();
      j["lengths"] = p.lengths;
      j["vanishing_from"] = p.vanishing_from ? Json(*p.vanishing_from) : Json(nullptr);
      emit(j);
    } else {
      out_ << "l(Tor_i): " << join(p.lengths) << "\n";
      out_ << "vanishing from: " << (p.vanishing_from ? std::to_string(*p.vanishing_from) : "none") << "\n";
    }
    return 0;
  }

  int ext() {
    const ModuleRep m = module_from(cfg_.module_file);
    const ModuleRep n = module_from(cfg_.module2_file);
    const auto v = ext_lengths(m, n, cfg_.steps, ropts_);
    const auto w = vanishing_scan(v, 1);
    if (cfg_.json) {
      Json j = header();
      j["lengths"] = v;
      j["vanishing_from"] = w ? Json(*w) : Json(nullptr);
      emit(j);
    } else {
      out_ << "l(Ext^i): " << join(v) << "\n";
      out_ << "vanishing from: " << (w ? std::to_string(*w) : "none") << "\n";
    }
    return 0;
  }

  int injcurv() {
    const ModuleRep n = module_from(cfg_.module_file);
    const BassSequence b = bass_sequence(n, cfg_.steps, ropts_);
    const CurvatureInterval c = curvature_estimate(b.values(), cfg_.window);
    if (cfg_.json) {
      Json j = header();
      j["bass"] = b.direct;
      j["betti_dual"] = b.via_dual;
      j["interval"] = interval_json(c);
      emit(j);
    } else {
      out_ << "bass numbers: " << join(b.direct) << "\n";
      out_ << "betti of dual: " << join(b.via_dual) << "\n";
      out_ << "injective curvature: " << interval_text(c) << "\n";
    }
    return 0;
  }

  int report(const AuditReport& r) {
    out_ << (cfg_.json ? render_json(r) : render_text(r));
    return exit_status(r);
  }

  int audit() {
    const std::string& a = cfg_.audit;
    if (a == "modx") return modx();
    if (a == "invariants") return invariants();
    AuditOptions ao;
    ao.depth = cfg_.steps;
    ao.window = cfg_.window;
    ao.resolve = ropts_;
    Auditor auditor(alg_, ao);
    AuditReport r{auditor.ring(), {}};
    const ModuleRep m = module_from(cfg_.module_file);
    if (a == "first") {
      r.checks.push_back(auditor.audit_first(m));
    } else if (a == "second-tor") {
      r.checks.push_back(auditor.audit_second_tor(m, module_from(cfg_.module2_file)));
    } else if (a == "second-ext") {
      r.checks.push_back(auditor.audit_second_ext(m, module_from(cfg_.module2_file)));
    } else if (a == "third") {
      r.checks.push_back(auditor.audit_third(m, cfg_.i0));
    } else {
      throw Error(Errc::kInvalidArgument, "unknown audit '" + a + "'");
    }
    return report(r);
  }

  int modx() {
    std::optional<Polynomial> x;
    if (!cfg_.x.empty()) {
      x = alg_->parse(cfg_.x);
    } else {
      x = find_linear_regular_element(*alg_, default_degree_bound(*alg_), 64, cfg_.seed);
      if (!x) throw Error(Errc::kNotRegular, "no regular linear form found; pass --x");
    }
    std::optional<std::vector<std::size_t>> ref;
    if (!cfg_.reference.empty()) ref = parse_sequence(cfg_.reference);
    CheckRecord c = modx_check(*alg_, *x, cfg_.steps, ref, ropts_);
    c.details.insert(c.details.begin(), {"x", x->to_string(alg_->vars())});
    return report(AuditReport{summarize(*alg_), {std::move(c)}});
  }

  int invariants() {
    InvariantOptions io;
    io.seed = cfg_.seed;
    io.count = cfg_.count;
    if (cfg_.steps_given) io.depth = cfg_.steps;
    io.resolve = ropts_;
    const InvariantReport r = invariant_suite(alg_, io);
    if (cfg_.json) {
      out_ << render_json(as_audit_report(r));
    } else {
      out_ << render_text(r);
    }
    return r.fail ? 1 : 0;
  }

  int preset() {
    PresetParams p;
    p.h = cfg_.h;
    p.characteristic = cfg_.characteristic;
    const auto files = preset_files(cfg_.preset, p);
    std::filesystem::create_directories(cfg_.dir);
    for (const auto& f : files) {
      const auto path = std::filesystem::path(cfg_.dir) / f.filename;
      write_text_file(path, f.contents);
      out_ << "wrote " << path.string() << "\n";
    }
    if (cfg_.preset == "modx") {
      out_ << "linear form: x (reference betti: " << join(complete_intersection_betti(2, 1, 6), ",") << ",...)\n";
    }
    return 0;
  }

  const JobConfig& cfg_;
  std::ostream& out_;
  ResolveOptions ropts_;
  AlgebraPtr alg_;
};

void add_common(CLI::App* sub, JobConfig& cfg, bool module2) {
  sub->add_option("ring", cfg.ring_file, "Ring description file")->required()->check(CLI::ExistingFile);
  sub->add_option("--module", cfg.module_file, "Module description file (default: the residue field)")
      ->check(CLI::ExistingFile);
  if (module2) {
    sub->add_option("--module2", cfg.module2_file, "Second module file (default: the residue field)")
        ->check(CLI::ExistingFile);
  }
  sub->add_option("--steps", cfg.steps, "Resolution depth")->check(CLI::Range(1, 10000))->each([&cfg](const std::string&) {
    cfg.steps_given = true;
  });
  sub->add_option("--window", cfg.window, "Ratio window length")->check(CLI::Range(1, 10000));
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--budget", cfg.budget, "Cap on l(A) * beta_n");
  sub->add_flag("--json", cfg.json, "Emit JSON");
}

}  // namespace

int execute(const JobConfig& job, std::ostream& out) { return Job(job, out).run(); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  CLI::App app{"Betti numbers, curvature and homological audits over artinian graded algebras", "curvlab"};
  app.require_subcommand(1);

  struct Plain {
    const char* name;
    const char* help;
    bool module2;
  };
  const Plain plain[] = {{"ring", "Summarize a ring", false},
                         {"resolve", "Minimal free resolution with verification", false},
                         {"betti", "Betti numbers of a module", false},
                         {"curv", "Curvature estimate of a module", false},
                         {"tor", "Lengths of Tor_i(M, N)", true},
                         {"ext", "Lengths of Ext^i(M, N)", true},
                         {"injcurv", "Bass numbers and injective curvature", false}};
  for (const auto& p : plain) {
    CLI::App* sub = app.add_subcommand(p.name, p.help);
    add_common(sub, cfg, p.module2);
    sub->callback([&cfg, name = std::string(p.name)] { cfg.command = name; });
  }

  CLI::App* audit = app.add_subcommand("audit", "Curvature audits and invariant checks");
  audit->require_subcommand(1);
  const std::pair<const char*, const char*> audits[] = {
      {"first", "Curvature bounds when curv(M) < curv(k)"},
      {"second-tor", "Curvature bounds from vanishing Tor"},
      {"second-ext", "Curvature bounds from vanishing Ext"},
      {"third", "curv(M) from a large first Betti ratio"},
      {"modx", "Reduction modulo a regular linear form"},
      {"invariants", "Unconditional identities on random modules"}};
  for (const auto& [name, help] : audits) {
    CLI::App* sub = audit->add_subcommand(name, help);
    const std::string n = name;
    add_common(sub, cfg, n == "second-tor" || n == "second-ext");
    if (n == "third") sub->add_option("--i0", cfg.i0, "Index of the Betti ratio");
    if (n == "modx") {
      sub->add_option("--x", cfg.x, "Linear form (default: a random regular one)");
      sub->add_option("--reference", cfg.reference, "Betti numbers of k over A, comma separated");
    }
    if (n == "invariants") sub->add_option("--count", cfg.count, "Number of random cases");
    sub->callback([&cfg, n] {
      cfg.command = "audit";
      cfg.audit = n;
    });
  }

  CLI::App* preset = app.add_subcommand("preset", "Write fixture files");
  preset->set_help_flag("--help", "Print this help message and exit");
  preset->add_option("name", cfg.preset, "ex1 | msquare | hypersurface | modx")->required();
  preset->add_option("--h", cfg.h, "Parameter of ex1")->check(CLI::Range(2u, 25u));
  preset->add_option("--char", cfg.characteristic, "Field characteristic");
  preset->add_option("--dir", cfg.dir, "Output directory");
  preset->callback([&cfg] { cfg.command = "preset"; });

  try {
    app.parse(argc, argv);
    if (cfg.command != "preset" && cfg.steps < cfg.window + 2) {
      throw CLI::ValidationError("--steps", "steps must be at least window + 2");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return execute(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 3;
  }
}

}  // namespace curvlab::tools
