#pragma once

#include <cstddef>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qck::sectors {

// Periodic chain of staggered fermion sites (occupation 0/1) alternating with
// gauge links (electric field -1, 0, +1). Link n joins site n to site n+1.
// Site n carries charge q_n = occupation_n - (n mod 2).
struct LatticeModel {
  int n_sites = 2;
  int n_links = 2;

  // Throws DomainError for a negative site count.
  static LatticeModel periodic_chain(int n_sites);

  int staggered_offset(int site) const { return site % 2; }
};

struct BasisState {
  std::vector<int> occupations;
  std::vector<int> fields;

  auto operator<=>(const BasisState&) const = default;
  bool operator==(const BasisState&) const = default;

  // Occupations as a bitstring, fields as base-3 digits (-1 -> 0, 0 -> 1,
  // +1 -> 2), joined by '|': "01|11".
  std::string encode() const;
};

// All 2^n_sites 3^n_links product states, occupations major and fields minor,
// each in lexicographic order with -1 < 0 < +1. Throws DomainError unless
// n_sites is even and >= 2.
std::vector<BasisState> enumerate_basis(const LatticeModel& m);

// One qubit per site plus two per link (sum of ceil(log2 local dim)).
int naive_qubit_count(const LatticeModel& m);

int site_charge(const LatticeModel& m, const BasisState& s, int site);

// Q = sum_n q_n.
int total_charge(const LatticeModel& m, const BasisState& s);

// E_n - E_{n-1} - q_n at a site (link indices mod n_links).
int gauss_residual(const LatticeModel& m, const BasisState& s, int site);

// Site whose Gauss constraint closes the chain; it carries the static charge
// -Q that makes a sector of total charge Q consistent on a ring.
inline constexpr int kReferenceSite = 0;

// Keeps states with zero Gauss residual at every site except the reference
// site. On a ring the reference residual then equals -Q, so the Q = 0 states
// are exactly those obeying Gauss's law everywhere.
std::vector<BasisState> gauss_filter(const LatticeModel& m, const std::vector<BasisState>& states);

// Partition by total charge. Order within each sector is preserved.
std::map<int, std::vector<BasisState>> charge_sectors(const LatticeModel& m, const std::vector<BasisState>& states);

// Lattice reflection about the reference site: occupation n -> -n, link
// n -> -n-1 (mod N) with E -> -E. An involution that preserves the
// staggering, Gauss's law and Q.
BasisState parity(const LatticeModel& m, const BasisState& s);

// A parity eigenvector as a combination of sector states (positions in the
// sector list): (|s> +- |Ps>)/sqrt(2), or |s> for a fixed point.
struct ParityVector {
  std::vector<std::pair<std::size_t, double>> terms;
};

struct ParityDecomposition {
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::vector<ParityVector> even_basis;
  std::vector<ParityVector> odd_basis;
};

// Throws std::logic_error if parity maps a sector state outside the sector.
ParityDecomposition parity_decompose(const LatticeModel& m, const std::vector<BasisState>& sector);

// ceil(log2(dim)), 0 for dim = 1. Throws DomainError for dim = 0.
int reduced_qubit_count(std::size_t dim);

struct SectorSummary {
  std::size_t dim = 0;
  std::vector<BasisState> states;
  std::size_t parity_even_dim = 0;
  std::size_t parity_odd_dim = 0;
  // An empty parity subsector needs no qubits.
  int reduced_qubits_even = 0;
  int reduced_qubits_odd = 0;
};

struct SectorReport {
  int n_sites = 0;
  std::size_t total_states = 0;
  int naive_qubits = 0;
  std::size_t physical_states = 0;
  std::map<int, SectorSummary> sectors;
  // Qubits needed by the largest parity subsector of the Q = 0 sector.
  int headline_qubits = 0;

  // "Q=<q>,P=<+1|-1>" labels of every nonempty parity subsector needing
  // exactly `qubits` qubits, in ascending Q then P = +1 first.
  std::vector<std::string> subsectors_needing(int qubits) const;
};

SectorReport full_report(const LatticeModel& m);

}  // namespace qck::sectors
