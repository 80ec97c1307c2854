#include "qck/sectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qck/errors.hpp"

namespace qck::sectors {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

void check_enumerable(const LatticeModel& m) {
  if (m.n_sites < 2 || m.n_sites % 2 != 0) {
    throw DomainError("lattice model needs an even number of sites >= 2, got " + std::to_string(m.n_sites));
  }
  if (m.n_links != m.n_sites) throw DomainError("periodic chain needs n_links == n_sites");
}

}  // namespace

LatticeModel LatticeModel::periodic_chain(int n_sites) {
  if (n_sites < 0) throw DomainError("periodic_chain: negative site count");
  return {n_sites, n_sites};
}

std::string BasisState::encode() const {
  std::string out;
  out.reserve(occupations.size() + fields.size() + 1);
  for (int o : occupations) out.push_back(static_cast<char>('0' + o));
  out.push_back('|');
  for (int e : fields) out.push_back(static_cast<char>('0' + e + 1));
  return out;
}

std::vector<BasisState> enumerate_basis(const LatticeModel& m) {
  check_enumerable(m);
  const std::size_t n_occ = std::size_t{1} << m.n_sites;
  std::size_t n_field = 1;
  for (int i = 0; i < m.n_links; ++i) n_field *= 3;

  std::vector<BasisState> out;
  out.reserve(n_occ * n_field);
  BasisState s{std::vector<int>(m.n_sites, 0), std::vector<int>(m.n_links, -1)};
  for (std::size_t o = 0; o < n_occ; ++o) {
    for (int i = 0; i < m.n_sites; ++i) s.occupations[i] = static_cast<int>((o >> (m.n_sites - 1 - i)) & 1U);
    std::fill(s.fields.begin(), s.fields.end(), -1);
    for (std::size_t f = 0; f < n_field; ++f) {
      out.push_back(s);
      // odometer, last link fastest
      for (int i = m.n_links - 1; i >= 0; --i) {
        if (s.fields[i] < 1) {
          ++s.fields[i];
          break;
        }
        s.fields[i] = -1;
      }
    }
  }
  return out;
}

int naive_qubit_count(const LatticeModel& m) {
  // ceil(log2 2) = 1 per site, ceil(log2 3) = 2 per link
  return m.n_sites * 1 + m.n_links * 2;
}

int site_charge(const LatticeModel& m, const BasisState& s, int site) {
  return s.occupations[site] - m.staggered_offset(site);
}

int total_charge(const LatticeModel& m, const BasisState& s) {
  int q = 0;
  for (int n = 0; n < m.n_sites; ++n) q += site_charge(m, s, n);
  return q;
}

int gauss_residual(const LatticeModel& m, const BasisState& s, int site) {
  return s.fields[site] - s.fields[wrap(site - 1, m.n_links)] - site_charge(m, s, site);
}

std::vector<BasisState> gauss_filter(const LatticeModel& m, const std::vector<BasisState>& states) {
  std::vector<BasisState> out;
  for (const auto& s : states) {
    bool ok = true;
    for (int n = 0; n < m.n_sites && ok; ++n) {
      if (n != kReferenceSite) ok = gauss_residual(m, s, n) == 0;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::map<int, std::vector<BasisState>> charge_sectors(const LatticeModel& m, const std::vector<BasisState>& states) {
  std::map<int, std::vector<BasisState>> out;
  for (const auto& s : states) out[total_charge(m, s)].push_back(s);
  return out;
}

BasisState parity(const LatticeModel& m, const BasisState& s) {
  BasisState p{std::vector<int>(m.n_sites), std::vector<int>(m.n_links)};
  for (int n = 0; n < m.n_sites; ++n) p.occupations[n] = s.occupations[wrap(-n, m.n_sites)];
  for (int n = 0; n < m.n_links; ++n) p.fields[n] = -s.fields[wrap(-n - 1, m.n_links)];
  return p;
}

ParityDecomposition parity_decompose(const LatticeModel& m, const std::vector<BasisState>& sector) {
  std::map<BasisState, std::size_t> position;
  for (std::size_t i = 0; i < sector.size(); ++i) position.emplace(sector[i], i);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ParityDecomposition out;
  for (std::size_t i = 0; i < sector.size(); ++i) {
    const auto it = position.find(parity(m, sector[i]));
    if (it == position.end()) {
      throw std::logic_error("parity_decompose: parity maps " + sector[i].encode() + " outside the sector");
    }
    const std::size_t j = it->second;
    if (j == i) {
      out.even_basis.push_back({{{i, 1.0}}});
    } else if (i < j) {
      out.even_basis.push_back({{{i, inv_sqrt2}, {j, inv_sqrt2}}});
      out.odd_basis.push_back({{{i, inv_sqrt2}, {j, -inv_sqrt2}}});
    }
  }
  out.even_dim = out.even_basis.size();
  out.odd_dim = out.odd_basis.size();
  return out;
}

int reduced_qubit_count(std::size_t dim) {
  if (dim == 0) throw DomainError("reduced_qubit_count: dimension must be >= 1");
  return dim == 1 ? 0 : static_cast<int>(std::bit_width(dim - 1));
}

std::vector<std::string> SectorReport::subsectors_needing(int qubits) const {
  std::vector<std::string> out;
  for (const auto& [q, s] : sectors) {
    if (s.parity_even_dim > 0 && s.reduced_qubits_even == qubits) out.push_back("Q=" + std::to_string(q) + ",P=+1");
    if (s.parity_odd_dim > 0 && s.reduced_qubits_odd == qubits) out.push_back("Q=" + std::to_string(q) + ",P=-1");
  }
  return out;
}

SectorReport full_report(const LatticeModel& m) {
  const auto basis = enumerate_basis(m);
  const auto physical = gauss_filter(m, basis);

  SectorReport r;
  r.n_sites = m.n_sites;
  r.total_states = basis.size();
  r.naive_qubits = naive_qubit_count(m);
  r.physical_states = physical.size();
  for (auto& [q, states] : charge_sectors(m, physical)) {
    const auto split = parity_decompose(m, states);
    SectorSummary s;
    s.dim = states.size();
    s.parity_even_dim = split.even_dim;
    s.parity_odd_dim = split.odd_dim;
    s.reduced_qubits_even = split.even_dim > 0 ? reduced_qubit_count(split.even_dim) : 0;
    s.reduced_qubits_odd = split.odd_dim > 0 ? reduced_qubit_count(split.odd_dim) : 0;
    s.states = std::move(states);
    r.sectors.emplace(q, std::move(s));
  }
  if (const auto it = r.sectors.find(0); it != r.sectors.end()) {
    r.headline_qubits = std::max(it->second.reduced_qubits_even, it->second.reduced_qubits_odd);
  }
  return r;
}

}  // namespace qck::sectors
