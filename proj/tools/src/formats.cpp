#include "qck_cli/formats.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qck::cli {

namespace {

std::string at(const std::string& where, const std::string& pointer) {
  return (where.empty() ? std::string("document") : where) + " at " + (pointer.empty() ? "/" : pointer);
}

const Json& require(const Json& doc, const char* key, const std::string& where, const std::string& base) {
  if (!doc.is_object()) throw FormatError(at(where, base) + ": expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(at(where, base) + ": missing field '" + key + "'");
  return *it;
}

long long require_int(const Json& v, const std::string& where, const std::string& pointer) {
  if (!v.is_number_integer()) throw FormatError(at(where, pointer) + ": expected an integer");
  return v.get<long long>();
}

double require_real(const Json& v, const std::string& where, const std::string& pointer) {
  if (!v.is_number()) throw FormatError(at(where, pointer) + ": expected a number");
  return v.get<double>();
}

}  // namespace

std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  }
  Json doc;
  doc["dim"] = m.rows();
  doc["entries"] = std::move(entries);
  return doc;
}

ComplexMatrix matrix_from_json(const Json& doc, const std::string& where) {
  const long long dim = require_int(require(doc, "dim", where, ""), where, "/dim");
  if (dim < 1) throw FormatError(at(where, "/dim") + ": dim must be >= 1");
  const Json& entries = require(doc, "entries", where, "");
  if (!entries.is_array()) throw FormatError(at(where, "/entries") + ": expected an array");
  if (entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw FormatError(at(where, "/entries") + ": expected " + std::to_string(dim * dim) + " entries, found " +
                      std::to_string(entries.size()));
  }
  ComplexMatrix m(dim, dim);
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const std::string pointer = "/entries/" + std::to_string(n);
    const Json& pair = entries[n];
    if (!pair.is_array() || pair.size() != 2) throw FormatError(at(where, pointer) + ": expected [re, im]");
    const double re = require_real(pair[0], where, pointer + "/0");
    const double im = require_real(pair[1], where, pointer + "/1");
    m(static_cast<Eigen::Index>(n) / dim, static_cast<Eigen::Index>(n) % dim) = Complex(re, im);
  }
  return m;
}

Json bloch_to_json(const BlochVector& tau) {
  Json doc;
  doc["d"] = tau.d;
  doc["tau"] = Json::array();
  for (Eigen::Index i = 0; i < tau.tau.size(); ++i) doc["tau"].push_back(tau.tau(i));
  return doc;
}

BlochVector bloch_from_json(const Json& doc, const std::string& where) {
  const long long d = require_int(require(doc, "d", where, ""), where, "/d");
  if (d < 2) throw FormatError(at(where, "/d") + ": d must be >= 2");
  const Json& tau = require(doc, "tau", where, "");
  if (!tau.is_array()) throw FormatError(at(where, "/tau") + ": expected an array");
  if (tau.size() != static_cast<std::size_t>(d * d - 1)) {
    throw FormatError(at(where, "/tau") + ": expected " + std::to_string(d * d - 1) + " components, found " +
                      std::to_string(tau.size()));
  }
  BlochVector out = bloch_origin(static_cast<int>(d));
  for (std::size_t i = 0; i < tau.size(); ++i) {
    out.tau(static_cast<Eigen::Index>(i)) = require_real(tau[i], where, "/tau/" + std::to_string(i));
  }
  return out;
}

Json basis_to_json(const GgmBasis& basis) {
  Json doc;
  doc["d"] = basis.d();
  doc["count"] = basis.size();
  doc["matrices"] = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Json m;
    m["label"] = basis.labels()[i].name();
    const Json body = matrix_to_json(basis[i]);
    m["dim"] = body["dim"];
    m["entries"] = body["entries"];
    doc["matrices"].push_back(std::move(m));
  }
  return doc;
}

Json report_to_json(const ValidationReport& r) {
  Json doc;
  doc["density_matrix"] = r.is_density_matrix();
  doc["hermitian"] = r.hermitian;
  doc["psd"] = r.psd;
  doc["normalized"] = r.normalized;
  doc["det_nonneg"] = r.det_nonneg;
  doc["min_eigenvalue"] = r.min_eigenvalue;
  doc["trace"] = Json::array({r.trace.real(), r.trace.imag()});
  doc["determinant"] = Json::array({r.determinant.real(), r.determinant.imag()});
  doc["violations"] = r.violations;
  return doc;
}

Json sector_report_to_json(const sectors::SectorReport& r) {
  Json doc;
  doc["n_sites"] = r.n_sites;
  doc["total_states"] = r.total_states;
  doc["naive_qubits"] = r.naive_qubits;
  doc["physical_states"] = r.physical_states;
  doc["sectors"] = Json::array();
  for (const auto& [q, s] : r.sectors) {
    Json entry;
    entry["Q"] = q;
    entry["dim"] = s.dim;
    entry["parity_even_dim"] = s.parity_even_dim;
    entry["parity_odd_dim"] = s.parity_odd_dim;
    entry["reduced_qubits_even"] = s.reduced_qubits_even;
    entry["reduced_qubits_odd"] = s.reduced_qubits_odd;
    entry["states"] = Json::array();
    for (const auto& st : s.states) entry["states"].push_back(st.encode());
    doc["sectors"].push_back(std::move(entry));
  }
  doc["headline"] = {{"sector", 0}, {"naive_qubits", r.naive_qubits}, {"reduced_qubits", r.headline_qubits}};
  Json by_qubits = Json::object();
  int max_qubits = 0;
  for (const auto& [q, s] : r.sectors) max_qubits = std::max({max_qubits, s.reduced_qubits_even, s.reduced_qubits_odd});
  for (int k = 0; k <= max_qubits; ++k) {
    const auto labels = r.subsectors_needing(k);
    if (!labels.empty()) by_qubits[std::to_string(k)] = labels;
  }
  doc["subsectors_by_qubits"] = std::move(by_qubits);
  return doc;
}

std::string sector_states_csv(const sectors::LatticeModel& m, const sectors::SectorReport& r) {
  std::ostringstream os;
  os << "Q,parity_class,state\n";
  for (const auto& [q, s] : r.sectors) {
    for (const auto& st : s.states) {
      os << q << ',' << (sectors::parity(m, st) == st ? "fixed" : "paired") << ',' << st.encode() << '\n';
    }
  }
  return os.str();
}

std::string spin1_samples_csv(const std::vector<spin1::Params>& states) {
  std::string out = "a,b,c,f_re,f_im,g_re,g_im,h_re,h_im,det\n";
  for (const auto& p : states) {
    const std::array<double, 10> row{p.a,      p.b,      p.c,      p.f.real(), p.f.imag(),
                                     p.g.real(), p.g.imag(), p.h.real(), p.h.imag(), spin1::determinant(p)};
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_real(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string trajectory_csv(const vopt::Trajectory& t) {
  std::string out = "iter,objective,projected";
  const Eigen::Index n = t.iterates.empty() ? 0 : t.iterates.front().tau.tau.size();
  for (Eigen::Index i = 1; i <= n; ++i) out += ",tau_" + std::to_string(i);
  out += '\n';
  for (std::size_t k = 0; k < t.iterates.size(); ++k) {
    const auto& it = t.iterates[k];
    out += std::to_string(k) + ',' + format_real(it.objective) + ',' + (it.projected ? "1" : "0");
    for (Eigen::Index i = 0; i < it.tau.tau.size(); ++i) out += ',' + format_real(it.tau.tau(i));
    out += '\n';
  }
  return out;
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(where + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError(path.string() + ": cannot open for writing");
  out << content;
  if (!out) throw FormatError(path.string() + ": write failed");
}

}  // namespace qck::cli
