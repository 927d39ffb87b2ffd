#include "dmtool/module_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dmtool {

using namespace dieudonne;

namespace {

std::string str(long long v) { return std::to_string(v); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

long long to_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty()) return v;
  }
  throw InputError(what + " must be an integer or a decimal string");
}

int to_int(const Json& j, const std::string& what) {
  const long long v = to_integer(j, what);
  if (v < -1000000 || v > 1000000) throw InputError(what + " is out of range");
  return static_cast<int>(v);
}

std::vector<std::string> labels_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(what + " labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Json int_list(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

}  // namespace

Json ring_to_json(const RingContext& ring) {
  Json modulus = Json::array();
  for (auto c : ring.modulus()) modulus.push_back(std::to_string(c));
  return Json{{"p", std::to_string(ring.p())},
              {"m", str(ring.degree())},
              {"precision", str(ring.precision())},
              {"modulus", modulus}};
}

Ring ring_from_json(const Json& j) {
  const long long p = to_integer(field(j, "p"), "ring.p");
  const int m = to_int(field(j, "m"), "ring.m");
  const int precision = to_int(field(j, "precision"), "ring.precision");
  if (p < 3) throw InputError("ring.p must be an odd prime");
  const Json& mod = field(j, "modulus");
  if (!mod.is_array() || static_cast<int>(mod.size()) != m) {
    throw InputError("ring.modulus must list m coefficients");
  }
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : mod) {
    const long long v = to_integer(c, "ring.modulus entry");
    if (v < 0) throw InputError("ring.modulus entries must be nonnegative");
    coeffs.push_back(static_cast<std::uint64_t>(v));
  }
  try {
    return RingContext::with_modulus(static_cast<std::uint64_t>(p), precision, coeffs);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("ring: ") + e.what());
  }
}

Json element_to_json(const RingContext& ring, const RingElement& e) {
  Json out = Json::array();
  for (const auto& s : ring.to_strings(e)) out.push_back(s);
  return out;
}

RingElement element_from_json(const RingContext& ring, const Json& j) {
  if (!j.is_array()) throw InputError("ring element must be an array of m residues");
  std::vector<std::string> digits;
  for (const auto& d : j) {
    if (d.is_string()) {
      digits.push_back(d.get<std::string>());
    } else if (d.is_number_integer()) {
      digits.push_back(std::to_string(d.get<long long>()));
    } else {
      throw InputError("ring element residues must be decimal strings");
    }
  }
  try {
    return ring.from_strings(digits);
  } catch (const std::exception& e) {
    throw InputError(std::string("ring element: ") + e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m.ctx(), m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Ring& ring, const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw InputError("matrix must have " + str(rows) + " rows");
  }
  Matrix out(ring, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw InputError("matrix row " + str(r) + " must have " + str(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      out.at(r, c) = element_from_json(*ring, row[static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

Json lattice_to_json(const Lattice& l) {
  return Json{{"denom", str(l.denom())}, {"generators", matrix_to_json(l.basis())}};
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", str(r.numerator())}, {"den", str(r.denominator())}};
}

Json module_to_json(const UnitaryModule& dm) {
  Json meta{{"family", dm.meta().family},
            {"k", dm.meta().k ? Json(str(*dm.meta().k)) : Json(nullptr)},
            {"notes", dm.meta().notes}};
  return Json{{"ring", ring_to_json(dm.ctx())},
              {"signature", {{"a", str(dm.a())}, {"b", str(dm.b())}}},
              {"basis", {{"M0", dm.labels0()}, {"M1", dm.labels1()}}},
              {"F", matrix_to_json(dm.frobenius_matrix())},
              {"pairing", matrix_to_json(dm.pairing_matrix())},
              {"meta", meta}};
}

UnitaryModule module_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("module file must be a JSON object");
  const Ring ring = ring_from_json(field(j, "ring"));
  const Json& sig = field(j, "signature");
  const int a = to_int(field(sig, "a"), "signature.a");
  const int b = to_int(field(sig, "b"), "signature.b");
  if (a < 0 || b < 0 || a + b < 1 || a + b > 64) throw InputError("invalid signature");
  const int n = 2 * (a + b);
  ModuleMeta meta;
  std::vector<std::string> labels0;
  std::vector<std::string> labels1;
  if (j.contains("basis")) {
    const Json& basis = j.at("basis");
    labels0 = labels_from(field(basis, "M0"), "basis.M0");
    labels1 = labels_from(field(basis, "M1"), "basis.M1");
  }
  if (j.contains("meta") && j.at("meta").is_object()) {
    const Json& m = j.at("meta");
    if (m.contains("family") && m.at("family").is_string()) meta.family = m.at("family");
    if (m.contains("k") && !m.at("k").is_null()) meta.k = to_int(m.at("k"), "meta.k");
    if (m.contains("notes") && m.at("notes").is_string()) meta.notes = m.at("notes");
  }
  Matrix f = matrix_from_json(ring, field(j, "F"), n, n);
  Matrix pairing = matrix_from_json(ring, field(j, "pairing"), n, n);
  try {
    return UnitaryModule(ring, a, b, std::move(f), std::move(pairing), std::move(meta),
                         std::move(labels0), std::move(labels1));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
}

UnitaryModule read_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return module_from_json(parse_json(buffer.str()));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json chain_to_json(const ChainAnalysis& ca) {
  Json out{{"side", ca.side},
           {"stabilized", ca.stabilized},
           {"stabilization_index",
            ca.stabilization_index ? Json(*ca.stabilization_index) : Json(nullptr)},
           {"iterations", ca.iterations},
           {"budget", ca.budget},
           {"budget_exceeded_at",
            ca.budget_exceeded_at ? Json(*ca.budget_exceeded_at) : Json(nullptr)},
           {"c", int_list(ca.c)},
           {"d", int_list(ca.d)},
           {"limit_exponent", ca.limit().exponent()}};
  if (ca.stabilized) out["limit"] = lattice_to_json(ca.limit());
  return out;
}

Json height_to_json(const MinimalHeightReport& report) {
  return Json{{"height", report.height},
              {"side_heights", {report.side_heights[0], report.side_heights[1]}},
              {"m", report.stabilization[0]},
              {"n", report.stabilization[1]},
              {"iterations", report.iterations},
              {"bound", report.bound},
              {"within_bound", report.within_bound},
              {"cross_check", report.cross_check},
              {"lambda", lattice_to_json(report.lambda)}};
}

Json slope_report_to_json(const SlopeReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    samples.push_back(
        {{"n", s.n}, {"min_valuation", s.min_valuation}, {"s", rational_to_json(s.s)}});
  }
  auto opt_rational = [](const std::optional<Rational>& r) {
    return r ? rational_to_json(*r) : Json(nullptr);
  };
  return Json{{"samples", samples},
              {"lower_bound", rational_to_json(report.lower_bound)},
              {"period", report.period ? Json(*report.period) : Json(nullptr)},
              {"period_valuation",
               report.period_valuation ? Json(*report.period_valuation) : Json(nullptr)},
              {"exact_isoclinic", report.exact_isoclinic},
              {"exact_slope", opt_rational(report.exact_slope)},
              {"newton_first_slope", opt_rational(report.newton_first_slope)},
              {"certified_upper_bound", rational_to_json(report.certified_upper_bound)}};
}

Json certificate_to_json(const NotSupersingularCertificate& cert) {
  Json out{{"kind", to_string(cert.kind)}, {"description", cert.description}};
  if (cert.slope) out["slope"] = rational_to_json(*cert.slope);
  if (cert.kind == CertificateKind::chain_budget) {
    out["side"] = cert.side;
    out["step"] = cert.step;
    out["exponent"] = cert.exponent;
    out["budget"] = cert.budget;
  } else if (cert.kind == CertificateKind::exact_period) {
    out["period"] = cert.step;
  }
  return out;
}

Json validation_to_json(const ValidationReport& report) {
  Json axioms = Json::array();
  for (const auto& a : report.axioms) {
    axioms.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  }
  return Json{{"valid", report.ok()}, {"failures", report.failures()}, {"axioms", axioms}};
}

Json chain_conditions_to_json(const ChainConditionReport& report) {
  Json chains = Json::array();
  for (const auto& c : report.chains) {
    chains.push_back({{"name", c.name},
                      {"expected", {c.expected_lower, c.expected_upper}},
                      {"lower", c.lower ? Json(*c.lower) : Json(nullptr)},
                      {"upper", c.upper ? Json(*c.upper) : Json(nullptr)},
                      {"passed", c.passed}});
  }
  return Json{{"ok", report.ok()},
              {"chains", chains},
              {"frobenius_dual", {report.frobenius_dual[0], report.frobenius_dual[1]}}};
}

}  // namespace dmtool
