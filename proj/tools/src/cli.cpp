#include "hllab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hllab/admissibility.hpp"
#include "hllab/errors.hpp"
#include "hllab/exponents.hpp"
#include "hllab/ksz.hpp"
#include "hllab/norm_estimation.hpp"
#include "hllab/serialize.hpp"
#include "hllab/sharpness.hpp"

namespace hllab::cli {

namespace {

enum class Format { Pretty, Json, Csv };

struct RunConfig {
  std::string theorem;
  int m{0};
  std::vector<std::string> p;
  std::string r;
  std::string q;
  std::vector<std::string> t;
  std::vector<std::size_t> n_list;
  int trials{20};
  std::uint64_t seed{0};
  int restarts{50};
  double budget{kDefaultOracleBudget};
  std::string method{"auto"};
  std::string format{"pretty"};
  std::string out;
  bool strict{false};
  // verify
  std::vector<std::string> tensor_files;
  std::string save_tensors;
  std::string bound;
  // sharpness / region
  std::vector<std::string> eps;
  int coordinate{0};
  bool empirical{false};
  std::string grid{"1:5:1/4"};
};

std::vector<ExtScalar> parse_list(const std::vector<std::string>& items) {
  std::vector<ExtScalar> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(ExtScalar::parse(s));
  return out;
}

std::optional<ExtScalar> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return ExtScalar::parse(s);
}

Format parse_format(const std::string& s) {
  if (s == "pretty") return Format::Pretty;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw Error(ErrorKind::Parameter, "unknown format '" + s + "'");
}

/// p list, repeated m times when a single value is given with -m.
std::vector<ExtScalar> space_exponents(const RunConfig& cfg) {
  if (cfg.p.empty()) throw Error(ErrorKind::Parameter, "-p is required");
  auto p = parse_list(cfg.p);
  if (cfg.m > 0) {
    if (p.size() == 1) {
      p.assign(static_cast<std::size_t>(cfg.m), p.front());
    } else if (p.size() != static_cast<std::size_t>(cfg.m)) {
      throw Error(ErrorKind::Dimension,
                  "-p has " + std::to_string(p.size()) + " values but -m is " + std::to_string(cfg.m));
    }
  }
  return p;
}

HLInstance make_instance(const RunConfig& cfg) {
  return HLInstance(space_exponents(cfg), parse_optional(cfg.r), parse_optional(cfg.q));
}

int degree(const RunConfig& cfg) {
  if (cfg.m > 0) return cfg.m;
  if (!cfg.p.empty()) return static_cast<int>(cfg.p.size());
  throw Error(ErrorKind::Parameter, "-m is required");
}

ExponentTuple compute_theorem(const std::string& name, const RunConfig& cfg) {
  if (name == "paulino") return exponents_paulino(degree(cfg));
  if (name == "critical-iso") return exponents_critical_iso(degree(cfg));
  if (name == "ot") {
    const auto p = space_exponents(cfg);
    if (p.size() != 2) throw Error(ErrorKind::Dimension, "ot is bilinear: give two p values");
    return exponents_ot(p[0], p[1]);
  }
  const HLInstance inst = make_instance(cfg);
  if (name == "main") return exponents_main(inst);
  if (name == "ar") return exponents_ar(inst);
  if (name == "aron") return exponents_aron(inst);
  if (name == "dimant") return dimant_tuple(inst);
  if (name == "praciano") return praciano_tuple(inst);
  if (name == "vector") return exponents_vector(inst);
  if (name == "vector-isotropic") return vector_isotropic_tuple(inst);
  if (name == "critical") return exponents_critical(inst);
  throw Error(ErrorKind::Parameter, "unknown theorem '" + name + "'");
}

// ---- rendering ------------------------------------------------------------

std::string cell(const ExtScalar& x) {
  if (x.is_inf()) return "inf";
  if (boost::multiprecision::denominator(x.value()) == 1) return x.to_string();
  return x.to_string() + " (" + truncated_decimal(x, 2) + ")";
}

struct Table {
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    }
    for (const auto& r : rows) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - display_width(r[i]) + 2, ' ');
      }
      os << line << "\n";
    }
  }

  static std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  }
};

std::vector<std::string> tuple_header(int m) {
  std::vector<std::string> h{"theorem", "k0", "constant"};
  for (int k = 1; k <= m; ++k) h.push_back("s_" + std::to_string(k));
  return h;
}

std::vector<std::string> tuple_row(const ExponentTuple& t) {
  std::vector<std::string> row{to_string(t.source), t.k0 ? std::to_string(*t.k0) : "-",
                               t.constant ? t.constant->to_string() : "-"};
  for (const auto& v : t.values) row.push_back(cell(v));
  return row;
}

std::string csv_row(const ExponentTuple& t) {
  std::string s = to_string(t.source) + "," + (t.k0 ? std::to_string(*t.k0) : "") + "," +
                  (t.constant ? t.constant->to_string() : "");
  for (const auto& v : t.values) s += "," + v.to_string();
  return s;
}

json tuple_json(const ExponentTuple& t) {
  json j = to_json(t);
  j["exact"] = json::array();
  j["decimals"] = json::array();
  for (const auto& v : t.values) {
    j["exact"].push_back(v.to_string());
    j["decimals"].push_back(truncated_decimal(v, 2));
  }
  if (t.constant) j["constant"] = t.constant->to_string();
  return j;
}

struct NotApplicable {
  std::string theorem;
  std::string reason;
};

void render_tuples(const std::vector<ExponentTuple>& rows, const std::vector<NotApplicable>& skipped,
                   const std::string& header, Format fmt, std::ostream& os) {
  switch (fmt) {
    case Format::Json: {
      json j;
      j["instance"] = header;
      j["rows"] = json::array();
      for (const auto& t : rows) j["rows"].push_back(tuple_json(t));
      j["not_applicable"] = json::array();
      for (const auto& s : skipped) j["not_applicable"].push_back({{"theorem", s.theorem}, {"reason", s.reason}});
      os << j.dump(2) << "\n";
      return;
    }
    case Format::Csv: {
      int m = 0;
      for (const auto& t : rows) m = std::max(m, t.m());
      os << "theorem,k0,constant";
      for (int k = 1; k <= m; ++k) os << ",s_" << k;
      os << "\n";
      for (const auto& t : rows) os << csv_row(t) << "\n";
      return;
    }
    case Format::Pretty: {
      if (!header.empty()) os << header << "\n\n";
      if (!rows.empty()) {
        int m = 0;
        for (const auto& t : rows) m = std::max(m, t.m());
        Table table;
        table.rows.push_back(tuple_header(m));
        for (const auto& t : rows) table.rows.push_back(tuple_row(t));
        table.print(os);
      }
      if (!skipped.empty()) {
        os << "\nnot applicable:\n";
        for (const auto& s : skipped) os << "  " << s.theorem << ": " << s.reason << "\n";
      }
      return;
    }
  }
}

/// Writes to --out when given, else to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (cfg.out.empty()) {
    body(out);
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error(ErrorKind::Parameter, "cannot write " + cfg.out);
  body(f);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Parameter, "cannot write " + path.string());
  f << text;
}

// ---- subcommands ----------------------------------------------------------

int cmd_exponents(const RunConfig& cfg, std::ostream& out) {
  if (cfg.theorem.empty()) throw Error(ErrorKind::Parameter, "--theorem is required");
  const auto t = compute_theorem(cfg.theorem, cfg);
  const std::string header = cfg.p.empty() ? "m=" + std::to_string(degree(cfg)) : make_instance(cfg).describe();
  emit(cfg, out, [&](std::ostream& os) { render_tuples({t}, {}, header, parse_format(cfg.format), os); });
  return kExitOk;
}

bool critical_isotropic(const HLInstance& inst) {
  const ExtScalar mm{inst.m()};
  return std::all_of(inst.p().begin(), inst.p().end(), [&](const ExtScalar& x) { return x == mm; });
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const HLInstance inst = make_instance(cfg);
  std::vector<std::string> names;
  if (inst.r() || inst.q()) {
    names = {"vector-isotropic", "vector"};
  } else if (critical_isotropic(inst)) {
    names = {"paulino", "critical-iso"};
  } else {
    names = {"dimant", "praciano", "ar", "aron", "main", "critical"};
    if (inst.m() == 2) names.push_back("ot");
  }
  RunConfig local = cfg;
  local.m = inst.m();
  std::vector<ExponentTuple> rows;
  std::vector<NotApplicable> skipped;
  for (const auto& name : names) {
    try {
      rows.push_back(compute_theorem(name, local));
    } catch (const Error& e) {
      skipped.push_back({name, e.what()});
    }
  }
  const std::string header = inst.describe() + ", regime " + classify_regime(inst).to_string();
  emit(cfg, out, [&](std::ostream& os) { render_tuples(rows, skipped, header, parse_format(cfg.format), os); });
  return kExitOk;
}

ExponentTuple requested_tuple(const RunConfig& cfg) {
  if (!cfg.t.empty()) {
    auto t = make_tuple(parse_list(cfg.t));
    if (cfg.m > 0 && t.m() == 1) t.values.assign(static_cast<std::size_t>(cfg.m), t.values.front());
    return t;
  }
  return compute_theorem(cfg.theorem.empty() ? "main" : cfg.theorem, cfg);
}

/// Constant of a proven inequality whose tuple is dominated by t, if any.
struct ReferenceBound {
  PowerOfTwo constant;
  std::string source;
};

std::optional<ReferenceBound> reference_bound(const ExponentTuple& t, const HLInstance& inst) {
  std::optional<ReferenceBound> best;
  const auto consider = [&](const ExponentTuple& base, const PowerOfTwo& c, const std::string& label) {
    if (base.m() != t.m() || !dominates(t, base)) return;
    if (!best || c.exponent < best->constant.exponent) best = ReferenceBound{c, label};
  };
  const bool all_inf = std::all_of(inst.p().begin(), inst.p().end(), [](const ExtScalar& x) { return x.is_inf(); });
  if (inst.m() == 2 && all_inf) {
    consider(make_tuple({ExtScalar(4, 3), ExtScalar(4, 3)}), PowerOfTwo{Rational(1, 2)}, "littlewood");
  }
  const std::vector<std::function<ExponentTuple()>> theorems = {
      [&] { return exponents_main(inst); },
      [&] { return exponents_aron(inst); },
      [&] { return inst.m() == 2 ? exponents_ot(inst.p(1), inst.p(2)) : throw Error(ErrorKind::NotApplicable, "m"); },
  };
  for (const auto& f : theorems) {
    try {
      const auto base = f();
      if (base.constant) consider(base, *base.constant, to_string(base.source));
    } catch (const Error&) {
    }
  }
  return best;
}

std::optional<PowerOfTwo> parse_bound(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.rfind("2^", 0) == 0) {
    std::string e = s.substr(2);
    if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
    bool neg = !e.empty() && e.front() == '-';
    if (neg) e.erase(0, 1);
    Rational x = ExtScalar::parse(e).value();
    return PowerOfTwo{neg ? Rational(-x) : x};
  }
  if (s == "1") return PowerOfTwo{Rational(0)};
  throw Error(ErrorKind::Format, "--bound must be written as 2^(a/b)");
}

struct VerifyRow {
  std::string label;
  std::size_t n{0};
  std::uint64_t seed{0};
  NormMethod method{NormMethod::Oracle};
  double mixed{0.0};
  double norm{0.0};
  double ratio{0.0};
  std::optional<bool> within;
};

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const ExponentTuple t = requested_tuple(cfg);
  const MixedNormSpec spec{t.values};
  const NormMethod method = norm_method_from_string(cfg.method);

  std::vector<std::pair<std::string, CoefficientTensor>> tensors;
  if (!cfg.tensor_files.empty()) {
    for (const auto& f : cfg.tensor_files) tensors.emplace_back(f, read_tensor_file(f));
  } else {
    if (cfg.n_list.empty()) throw Error(ErrorKind::Parameter, "verify needs --tensor files or --n-list");
    for (std::size_t n : cfg.n_list) {
      for (int trial = 0; trial < cfg.trials; ++trial) {
        const auto s = trial_seed(cfg.seed, n, trial);
        tensors.emplace_back("ksz", ksz_sample(t.m(), n, s));
      }
    }
  }
  if (!cfg.save_tensors.empty()) {
    std::filesystem::create_directories(cfg.save_tensors);
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      std::ostringstream name;
      name << "tensor_" << std::setw(4) << std::setfill('0') << i << ".json";
      write_tensor_file(std::filesystem::path(cfg.save_tensors) / name.str(), tensors[i].second);
    }
  }

  RunConfig local = cfg;
  if (local.p.empty()) local.p = {"inf"};
  if (local.m == 0) local.m = t.m();
  const HLInstance inst = make_instance(local);
  if (inst.m() != t.m()) throw Error(ErrorKind::Dimension, "tuple length does not match m");
  const BallSpec ball{inst.p()};

  std::optional<ReferenceBound> ref;
  if (const auto user = parse_bound(cfg.bound)) {
    ref = ReferenceBound{*user, "user"};
  } else {
    ref = reference_bound(t, inst);
  }
  const auto cls = classify_tuple(t, inst);

  std::vector<VerifyRow> rows;
  std::size_t exceeded = 0;
  double worst = 0.0;
  for (const auto& [label, T] : tensors) {
    for (std::size_t d : T.dims()) {
      if (d != T.dims().front()) throw Error(ErrorKind::Dimension, "verify expects n x ... x n tensors");
    }
    if (T.order() != inst.m()) throw Error(ErrorKind::Dimension, "tensor order does not match m");
    VerifyRow row;
    row.label = label;
    row.n = T.dims().front();
    row.seed = T.seed().value_or(0);
    const double cost = oracle_cost(T, ball);
    const bool oracle_ok = !std::isinf(cost) && cost <= cfg.budget;
    row.method = method == NormMethod::Auto ? (oracle_ok ? NormMethod::Oracle : NormMethod::Multistart) : method;
    row.mixed = mixed_norm(T, spec);
    if (row.method == NormMethod::Oracle) {
      row.norm = exact_norm(T, ball, cfg.budget).value;
    } else {
      MultistartOptions opts;
      opts.restarts = cfg.restarts;
      opts.seed = derive_seed(row.seed, 1, 0);
      row.norm = estimate_norm(T, ball, opts).value;
    }
    row.ratio = row.norm > 0.0 ? row.mixed / row.norm : 0.0;
    worst = std::max(worst, row.ratio);
    if (ref) {
      const double slack = row.method == NormMethod::Multistart ? 1.0 + kMultistartSlack : 1.0;
      row.within = row.ratio <= ref->constant.to_double() * slack + 1e-9;
      if (!*row.within) ++exceeded;
    }
    rows.push_back(row);
  }

  const bool proven = ref && ref->source != "user";
  std::string note;
  if (!ref) {
    note = "no proven constant applies to this tuple";
  } else if (exceeded == 0) {
    note = "all ratios within " + ref->constant.to_string();
  } else if (proven) {
    note = std::to_string(exceeded) + " ratio(s) exceed the proven constant " + ref->constant.to_string();
  } else {
    note = std::to_string(exceeded) + " ratio(s) exceed " + ref->constant.to_string() + "; not a violation, tuple is " +
           to_string(cls.label);
  }

  const Format fmt = parse_format(cfg.format);
  emit(cfg, out, [&](std::ostream& os) {
    if (fmt == Format::Json) {
      json j;
      j["instance"] = inst.describe();
      j["tuple"] = tuple_json(t);
      j["classification"] = {{"label", to_string(cls.label)}, {"reason", cls.reason}};
      j["bound"] = ref ? json{{"constant", ref->constant.to_string()}, {"value", ref->constant.to_double()},
                               {"source", ref->source}}
                       : json(nullptr);
      j["forms"] = json::array();
      for (const auto& r : rows) {
        j["forms"].push_back({{"source", r.label},
                              {"n", r.n},
                              {"seed", r.seed},
                              {"method", to_string(r.method)},
                              {"mixed_norm", r.mixed},
                              {"norm", r.norm},
                              {"ratio", r.ratio},
                              {"within_bound", r.within ? json(*r.within) : json(nullptr)}});
      }
      j["max_ratio"] = worst;
      j["exceeded"] = exceeded;
      j["note"] = note;
      os << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
      os << "source,n,seed,method,mixed_norm,norm,ratio,within_bound\n";
      for (const auto& r : rows) {
        os << r.label << "," << r.n << "," << r.seed << "," << to_string(r.method) << "," << format_double(r.mixed)
           << "," << format_double(r.norm) << "," << format_double(r.ratio) << ","
           << (r.within ? (*r.within ? "yes" : "no") : "") << "\n";
      }
    } else {
      os << inst.describe() << ", t=" << to_string(t) << " (" << to_string(cls.label) << ")\n";
      os << "bound: " << (ref ? ref->constant.to_string() + " = " + format_double(ref->constant.to_double()) + " [" +
                                    ref->source + "]"
                              : std::string("none"))
         << "\n\n";
      Table table;
      table.rows.push_back({"source", "n", "seed", "method", "mixed_norm", "norm", "ratio", "within"});
      for (const auto& r : rows) {
        table.rows.push_back({r.label, std::to_string(r.n), std::to_string(r.seed), to_string(r.method),
                              format_double(r.mixed), format_double(r.norm), format_double(r.ratio),
                              r.within ? (*r.within ? "yes" : "no") : "-"});
      }
      table.print(os);
      os << "\nmax ratio " << format_double(worst) << "; " << note << "\n";
    }
  });
  return kExitOk;
}

std::string perturb_pretty(const std::vector<PerturbRow>& rows) {
  Table table;
  table.rows.push_back({"coord", "direction", "eps", "perturbed", "label", "empirical", "reason"});
  for (const auto& r : rows) {
    table.rows.push_back({std::to_string(r.coordinate), r.direction == Direction::Decrease ? "decrease" : "increase",
                          r.eps.to_string(), r.perturbed ? to_string(*r.perturbed) : "-",
                          to_string(r.classification.label), r.empirical ? to_string(*r.empirical) : "-",
                          r.classification.reason});
  }
  std::ostringstream os;
  table.print(os);
  return os.str();
}

std::string growth_pretty(const GrowthReport& g) {
  Table table;
  table.rows.push_back({"n", "method", "max_ratio", "mean_ratio"});
  for (const auto& r : g.rows) {
    table.rows.push_back({std::to_string(r.n), to_string(r.method), format_double(r.max_ratio),
                          format_double(r.mean_ratio)});
  }
  std::ostringstream os;
  table.print(os);
  os << "slope " << format_double(g.fit.slope) << " +- " << format_double(g.fit.stderr_slope) << ", verdict "
     << to_string(g.verdict);
  if (g.predicted_slope) os << ", predicted " << rational_text(*g.predicted_slope);
  os << "\n";
  return os.str();
}

int cmd_sharpness(const RunConfig& cfg, std::ostream& out) {
  RunConfig local = cfg;
  const HLInstance inst = make_instance(local);
  local.m = inst.m();
  const ExponentTuple s = requested_tuple(local);
  const NormMethod method = norm_method_from_string(cfg.method);
  if (cfg.eps.empty() && cfg.n_list.empty()) {
    throw Error(ErrorKind::Parameter, "sharpness needs --eps (perturbation scan) and/or --n-list (growth curve)");
  }

  std::optional<std::vector<PerturbRow>> perturb;
  std::optional<GrowthReport> growth;
  bool inconclusive = false;

  if (!cfg.eps.empty()) {
    std::optional<EmpiricalCheck> check;
    if (cfg.empirical) {
      if (cfg.n_list.empty()) throw Error(ErrorKind::Parameter, "--empirical needs --n-list");
      check = EmpiricalCheck{cfg.n_list, cfg.trials, cfg.seed, method, cfg.restarts, cfg.budget, 0.05};
    }
    auto rows = perturb_scan(s, inst, parse_list(cfg.eps), check);
    if (cfg.coordinate > 0) {
      if (cfg.coordinate > inst.m()) throw Error(ErrorKind::Parameter, "--coordinate out of range");
      std::erase_if(rows, [&](const PerturbRow& r) { return r.coordinate != cfg.coordinate; });
    }
    for (const auto& r : rows) inconclusive |= r.empirical == Verdict::Inconclusive;
    perturb = std::move(rows);
  }
  if (!cfg.n_list.empty() && !cfg.empirical) {
    GrowthExperiment exp;
    exp.m = inst.m();
    exp.p = BallSpec{inst.p()};
    exp.t = MixedNormSpec{s.values};
    exp.n_list = cfg.n_list;
    exp.trials = cfg.trials;
    exp.seed = cfg.seed;
    exp.method = method;
    exp.restarts = cfg.restarts;
    exp.budget = cfg.budget;
    growth = ratio_curve(exp);
    inconclusive |= growth->verdict == Verdict::Inconclusive;
  }

  if (!cfg.out.empty()) {
    if (perturb) {
      write_file(cfg.out + ".perturb.json", to_json(*perturb).dump(2) + "\n");
      write_file(cfg.out + ".perturb.csv", perturb_csv(*perturb));
    }
    if (growth) {
      write_file(cfg.out + ".growth.json", to_json(*growth).dump(2) + "\n");
      write_file(cfg.out + ".growth.csv", growth_csv(*growth));
    }
  } else {
    const Format fmt = parse_format(cfg.format);
    if (fmt == Format::Json) {
      json j;
      j["instance"] = inst.describe();
      j["tuple"] = tuple_json(s);
      j["perturb"] = perturb ? to_json(*perturb) : json(nullptr);
      j["growth"] = growth ? to_json(*growth) : json(nullptr);
      out << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
      if (perturb) out << perturb_csv(*perturb);
      if (perturb && growth) out << "\n";
      if (growth) out << growth_csv(*growth);
    } else {
      out << inst.describe() << ", tuple " << to_string(s) << "\n";
      if (perturb) out << "\n" << perturb_pretty(*perturb);
      if (growth) out << "\n" << growth_pretty(*growth);
    }
  }
  return cfg.strict && inconclusive ? kExitInconclusive : kExitOk;
}

std::vector<ExtScalar> parse_axis(const std::string& grid) {
  const auto a = grid.find(':');
  const auto b = grid.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw Error(ErrorKind::Format, "--grid must be lo:hi:step, got '" + grid + "'");
  }
  return linear_axis(ExtScalar::parse(grid.substr(0, a)), ExtScalar::parse(grid.substr(a + 1, b - a - 1)),
                     ExtScalar::parse(grid.substr(b + 1)));
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  const HLInstance inst = make_instance(cfg);
  const auto axis = parse_axis(cfg.grid);
  const auto sample = region_grid(inst, {axis, axis, axis});
  if (!cfg.out.empty()) {
    write_file(cfg.out + ".json", to_json(sample).dump(2) + "\n");
    write_file(cfg.out + ".csv", region_csv(sample));
    return kExitOk;
  }
  const Format fmt = parse_format(cfg.format);
  if (fmt == Format::Json) {
    out << to_json(sample).dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    out << region_csv(sample);
  } else {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& pt : sample.points) ++counts[static_cast<int>(pt.label)];
    out << inst.describe() << ", grid " << cfg.grid << " (" << sample.points.size() << " points)\n"
        << "Admissible " << counts[0] << ", NonAdmissible " << counts[1] << ", Unknown " << counts[2] << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact exponents and desk-scale experiments for Hardy-Littlewood inequalities", "hllab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file mirroring the long flag names; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  app.add_option("--theorem", cfg.theorem,
                 "main, ar, aron, dimant, praciano, ot, vector, vector-isotropic, critical, critical-iso, paulino");
  app.add_option("-m", cfg.m, "degree")->check(CLI::PositiveNumber);
  app.add_option("-p", cfg.p, "space exponents, comma list (10, 4/3, inf); one value is repeated m times")
      ->delimiter(',');
  app.add_option("-r", cfg.r, "summing parameter r (vector-valued theorems)");
  app.add_option("-q", cfg.q, "cotype q (vector-valued theorems)");
  app.add_option("-t", cfg.t, "exponent tuple, comma list")->delimiter(',');
  app.add_option("--n-list", cfg.n_list, "dimensions, comma list")->delimiter(',');
  app.add_option("--trials", cfg.trials, "random forms per dimension")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "base seed");
  app.add_option("--restarts", cfg.restarts, "multistart restarts")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "exact oracle enumeration budget")->check(CLI::PositiveNumber);
  app.add_option("--method", cfg.method, "norm method")->check(CLI::IsMember({"auto", "oracle", "multistart"}));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--out", cfg.out, "output file (exponents, table, verify) or artifact prefix (sharpness, region)");
  app.add_flag("--strict", cfg.strict, "exit 2 when a verdict is Inconclusive");
  app.add_option("--tensor", cfg.tensor_files, "tensor JSON file to verify (repeatable)");
  app.add_option("--save-tensors", cfg.save_tensors, "directory receiving the verified tensors as JSON");
  app.add_option("--bound", cfg.bound, "comparison constant 2^(a/b) overriding the proven one");
  app.add_option("--eps", cfg.eps, "perturbation sizes, comma list")->delimiter(',');
  app.add_option("--coordinate", cfg.coordinate, "only report this 1-based coordinate");
  app.add_flag("--empirical", cfg.empirical, "run a growth experiment for every perturbed tuple");
  app.add_option("--grid", cfg.grid, "region axis lo:hi:step, shared by t1, t2, t3");

  auto* exponents = app.add_subcommand("exponents", "exponent tuple of one theorem");
  auto* table = app.add_subcommand("table", "comparison of every theorem on one instance");
  auto* verify = app.add_subcommand("verify", "mixed norm / operator norm ratios on sampled or loaded forms");
  auto* sharpness = app.add_subcommand("sharpness", "perturbation scan and growth curve");
  auto* region = app.add_subcommand("region", "classification lattice for m = 3");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (exponents->parsed()) return cmd_exponents(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (sharpness->parsed()) return cmd_sharpness(cfg, out);
    if (region->parsed()) return cmd_region(cfg, out);
  } catch (const Error& e) {
    err << "hllab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hllab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hllab::cli
