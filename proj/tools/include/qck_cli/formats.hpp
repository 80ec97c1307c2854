#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qck/bloch.hpp"
#include "qck/density.hpp"
#include "qck/ggm.hpp"
#include "qck/matrix.hpp"
#include "qck/sectors.hpp"
#include "qck/spin1.hpp"
#include "qck/vopt.hpp"

namespace qck::cli {

using Json = nlohmann::ordered_json;

// Unreadable file, malformed document or a field of the wrong shape. The
// message carries the file and the byte offset or JSON pointer of the fault.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal that round-trips, '.' separator regardless of locale.
std::string format_real(double x);

// Matrix document: {"dim": N, "entries": [[re, im], ...]} row-major, N^2
// pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& doc, const std::string& where = "");

// Bloch document: {"d": d, "tau": [..d^2-1 reals..]}.
Json bloch_to_json(const BlochVector& tau);
BlochVector bloch_from_json(const Json& doc, const std::string& where = "");

// {"d": d, "count": d^2-1, "matrices": [{"label": "s12", "dim": d, "entries": ...}, ...]}
Json basis_to_json(const GgmBasis& basis);

Json report_to_json(const ValidationReport& r);
Json sector_report_to_json(const sectors::SectorReport& r);

// One row per basis state: Q,parity_class,state where parity_class is
// "fixed" or "paired".
std::string sector_states_csv(const sectors::LatticeModel& m, const sectors::SectorReport& r);

// a,b,c,f_re,f_im,g_re,g_im,h_re,h_im,det
std::string spin1_samples_csv(const std::vector<spin1::Params>& states);

// iter,objective,projected,tau_1..tau_n
std::string trajectory_csv(const vopt::Trajectory& t);

Json parse_json(const std::string& text, const std::string& where);
Json read_json_file(const std::filesystem::path& path);

// Pretty-printed document with a trailing newline.
std::string dump(const Json& doc);

// Writes bytes exactly; throws FormatError if the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace qck::cli
