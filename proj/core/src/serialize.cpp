#include "hllab/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hllab/errors.hpp"

namespace hllab {

namespace {

std::int64_t to_int64(const boost::multiprecision::cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Overflow, "exact value " + v.str() + " does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

std::string tuple_text(const ExponentTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.values.size(); ++i) out += (i ? ";" : "") + t.values[i].to_string();
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

json to_json(const ExtScalar& x) {
  if (x.is_inf()) return "inf";
  return json{{"num", to_int64(boost::multiprecision::numerator(x.value()))},
              {"den", to_int64(boost::multiprecision::denominator(x.value()))}};
}

ExtScalar ext_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtScalar::infinity();
    throw Error(ErrorKind::Format, "expected \"inf\" or {num, den}");
  }
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_number_integer() ||
      !j["den"].is_number_integer()) {
    throw Error(ErrorKind::Format, "expected \"inf\" or {num, den}");
  }
  return ExtScalar(j["num"].get<std::int64_t>(), j["den"].get<std::int64_t>());
}

json to_json(const ExponentTuple& t) {
  json j;
  j["source"] = to_string(t.source);
  j["values"] = json::array();
  for (const auto& v : t.values) j["values"].push_back(to_json(v));
  if (t.k0) j["k0"] = *t.k0;
  if (t.constant) j["constant_log2"] = to_json(ExtScalar(t.constant->exponent));
  return j;
}

ExponentTuple tuple_from_json(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
    throw Error(ErrorKind::Format, "tuple needs a values array");
  }
  ExponentTuple t;
  t.source = j.contains("source") ? source_from_string(j["source"].get<std::string>()) : Source::User;
  for (const auto& v : j["values"]) t.values.push_back(ext_from_json(v));
  if (j.contains("k0")) t.k0 = j["k0"].get<int>();
  if (j.contains("constant_log2")) t.constant = PowerOfTwo{ext_from_json(j["constant_log2"]).value()};
  return t;
}

json to_json(const CoefficientTensor& T) {
  json j;
  j["m"] = T.order();
  j["dims"] = T.dims();
  if (T.seed()) j["seed"] = *T.seed();
  j["entries"] = std::vector<double>(T.entries().begin(), T.entries().end());
  return j;
}

CoefficientTensor tensor_from_json(const json& j) {
  try {
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (j.contains("m") && j["m"].get<std::size_t>() != dims.size()) {
      throw Error(ErrorKind::Format, "tensor header m does not match dims");
    }
    std::optional<std::uint64_t> seed;
    if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
    return CoefficientTensor(dims, j.at("entries").get<std::vector<double>>(), seed);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("bad tensor JSON: ") + e.what());
  }
}

void write_tensor_file(const std::filesystem::path& path, const CoefficientTensor& T) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Format, "cannot write " + path.string());
  out << to_json(T).dump() << "\n";
}

CoefficientTensor read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot read " + path.string());
  try {
    return tensor_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Format, "bad tensor JSON in " + path.string() + ": " + e.what());
  }
}

std::string slice_csv(const CoefficientTensor& T, const std::vector<std::size_t>& lead) {
  const int m = T.order();
  if (m < 2) throw Error(ErrorKind::Dimension, "a 2-way slice needs order >= 2");
  if (lead.size() != static_cast<std::size_t>(m - 2)) throw Error(ErrorKind::Dimension, "need order-2 leading indices");
  std::vector<std::size_t> idx(lead);
  idx.push_back(0);
  idx.push_back(0);
  const std::size_t rows = T.dims()[static_cast<std::size_t>(m - 2)];
  const std::size_t cols = T.dims()[static_cast<std::size_t>(m - 1)];
  std::ostringstream os;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      idx[idx.size() - 2] = i;
      idx.back() = j;
      os << (j ? "," : "") << format_double(T.at(idx));
    }
    os << "\n";
  }
  return os.str();
}

json to_json(const NormEstimate& e) {
  json j;
  j["value"] = e.value;
  j["exact"] = e.exact;
  j["converged"] = e.converged;
  j["restarts_used"] = e.restarts_used;
  j["iterations"] = e.iterations;
  j["witnesses"] = e.witnesses;
  return j;
}

json to_json(const GrowthReport& r) {
  json j;
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["n"] = row.n;
    jr["method"] = to_string(row.method);
    jr["max_ratio"] = row.max_ratio;
    jr["mean_ratio"] = row.mean_ratio;
    jr["trials"] = json::array();
    for (const auto& t : row.trials) {
      jr["trials"].push_back({{"seed", t.seed}, {"mixed_norm", t.mixed}, {"norm", t.norm}, {"ratio", t.ratio}});
    }
    j["rows"].push_back(std::move(jr));
  }
  j["slope"] = r.fit.slope;
  j["slope_stderr"] = r.fit.stderr_slope;
  j["intercept"] = r.fit.intercept;
  j["verdict"] = to_string(r.verdict);
  j["predicted_slope"] = r.predicted_slope ? json(rational_text(*r.predicted_slope)) : json(nullptr);
  return j;
}

std::string growth_csv(const GrowthReport& r) {
  std::ostringstream os;
  os << "n,trial,seed,method,mixed_norm,norm,ratio\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.trials.size(); ++i) {
      const auto& t = row.trials[i];
      os << row.n << "," << i << "," << t.seed << "," << to_string(row.method) << "," << format_double(t.mixed)
         << "," << format_double(t.norm) << "," << format_double(t.ratio) << "\n";
    }
  }
  return os.str();
}

json to_json(const RegionSample& r) {
  json j = json::array();
  for (const auto& pt : r.points) {
    json jp;
    jp["t"] = json::array();
    for (const auto& v : pt.t) jp["t"].push_back(to_json(v));
    jp["label"] = to_string(pt.label);
    j.push_back(std::move(jp));
  }
  return j;
}

std::string region_csv(const RegionSample& r) {
  std::ostringstream os;
  os << "t1,t2,t3,label\n";
  for (const auto& pt : r.points) {
    for (const auto& v : pt.t) os << v.to_string() << ",";
    os << to_string(pt.label) << "\n";
  }
  return os.str();
}

json to_json(const std::vector<PerturbRow>& rows) {
  json j = json::array();
  for (const auto& row : rows) {
    json jr;
    jr["coordinate"] = row.coordinate;
    jr["direction"] = row.direction == Direction::Decrease ? "decrease" : "increase";
    jr["eps"] = to_json(row.eps);
    jr["perturbed"] = row.perturbed ? to_json(*row.perturbed) : json(nullptr);
    jr["label"] = to_string(row.classification.label);
    jr["reason"] = row.classification.reason;
    jr["empirical"] = row.empirical ? json(to_string(*row.empirical)) : json(nullptr);
    j.push_back(std::move(jr));
  }
  return j;
}

std::string perturb_csv(const std::vector<PerturbRow>& rows) {
  std::ostringstream os;
  os << "coordinate,direction,eps,perturbed,label,empirical,reason\n";
  for (const auto& row : rows) {
    os << row.coordinate << "," << (row.direction == Direction::Decrease ? "decrease" : "increase") << ","
       << row.eps.to_string() << "," << (row.perturbed ? tuple_text(*row.perturbed) : "") << ","
       << to_string(row.classification.label) << "," << (row.empirical ? to_string(*row.empirical) : "") << ","
       << csv_field(row.classification.reason) << "\n";
  }
  return os.str();
}

}  // namespace hllab
