#include "orbitheta/orbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace orbitheta {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::SO: return "SO";
    case Flavor::O: return "O";
    case Flavor::Sp: return "Sp";
    case Flavor::Spin: return "Spin";
    case Flavor::Pin: return "Pin";
    case Flavor::GL: return "GL";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  fail(Errc::BadInput, "unknown family '" + s + "'");
}

Flavor parse_flavor(const std::string& s) {
  if (s == "SO" || s == "so") return Flavor::SO;
  if (s == "O" || s == "o") return Flavor::O;
  if (s == "Sp" || s == "sp" || s == "SP") return Flavor::Sp;
  if (s == "Spin" || s == "spin") return Flavor::Spin;
  if (s == "Pin" || s == "pin") return Flavor::Pin;
  if (s == "GL" || s == "gl") return Flavor::GL;
  fail(Errc::BadInput, "unknown flavor '" + s + "'");
}

std::string AlgebraType::name() const {
  switch (family) {
    case Family::A: return "gl(" + std::to_string(N) + ")";
    case Family::B:
    case Family::D: return "so(" + std::to_string(N) + ")";
    case Family::C: return "sp(" + std::to_string(N) + ")";
  }
  return "?";
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) fail(Errc::BadInput, "partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      fail(Errc::BadInput, "partition parts must be non-increasing");
  }
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Partition transpose(const Partition& p) {
  std::vector<int> t;
  if (!p.parts.empty()) {
    t.resize(p.parts[0], 0);
    for (int part : p.parts)
      for (int j = 0; j < part; ++j) ++t[j];
  }
  return Partition(std::move(t));
}

std::string OrbitDescriptor::to_string() const {
  std::string s = algebra.name() + " rows " + rows.to_string();
  if (very_even_label)
    s += *very_even_label == VeryEven::I ? " [I]" : " [II]";
  return s;
}

bool is_valid_partition_for(Family family, const Partition& rows) {
  std::map<int, int> mult;
  for (int p : rows.parts) ++mult[p];
  switch (family) {
    case Family::A:
      return true;
    case Family::B:
    case Family::D:
      for (auto [size, m] : mult)
        if (size % 2 == 0 && m % 2 != 0) return false;
      return true;
    case Family::C:
      for (auto [size, m] : mult)
        if (size % 2 != 0 && m % 2 != 0) return false;
      return true;
  }
  return false;
}

bool is_very_even(Family family, const Partition& rows) {
  if (family != Family::D) return false;
  // All columns pair up as m'_{2j} = m'_{2j+1}: equivalently every row size
  // is even (then columns come in equal even-start pairs).
  if (rows.empty()) return false;
  for (int p : rows.parts)
    if (p % 2 != 0) return false;
  return true;
}

OrbitDescriptor validate_orbit(AlgebraType algebra, const Partition& rows, Flavor flavor,
                               std::optional<VeryEven> label) {
  if (algebra.family == Family::B && algebra.N % 2 == 0)
    fail(Errc::SizeMismatch, "family B needs odd N");
  if ((algebra.family == Family::C || algebra.family == Family::D) && algebra.N % 2 != 0)
    fail(Errc::SizeMismatch, "families C and D need even N");
  if (rows.sum() != algebra.N)
    fail(Errc::SizeMismatch, rows.to_string() + " sums to " + std::to_string(rows.sum()) +
                                 ", expected " + std::to_string(algebra.N));
  std::map<int, int> mult;
  for (int p : rows.parts) ++mult[p];
  for (auto [size, m] : mult) {
    bool bad = false;
    if (algebra.family == Family::B || algebra.family == Family::D)
      bad = size % 2 == 0 && m % 2 != 0;
    else if (algebra.family == Family::C)
      bad = size % 2 != 0 && m % 2 != 0;
    if (bad)
      fail(Errc::ParityViolation, "part " + std::to_string(size) + " occurs " +
                                      std::to_string(m) + " times in " + rows.to_string());
  }
  OrbitDescriptor o;
  o.algebra = algebra;
  o.rows = rows;
  o.flavor = flavor;
  if (is_very_even(algebra.family, rows)) {
    o.very_even_label = label.value_or(VeryEven::I);
  } else if (label) {
    fail(Errc::BadInput, "very_even_label given for a non-very-even orbit");
  }
  return o;
}

std::vector<int> columns(const OrbitDescriptor& o) {
  Partition t = transpose(o.rows);
  std::vector<int> cols = t.parts;
  switch (o.algebra.family) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      if (cols.size() % 2 == 0) cols.push_back(0);
      break;
    case Family::D:
      if (cols.size() % 2 != 0) cols.push_back(0);
      break;
  }
  return cols;
}

namespace {

// Greedy left-to-right removal of equal pairs starting at indices of the given
// parity (0 for B/D, 1 for C), re-scanning after each removal.
void remove_equal_pairs(std::vector<int>& cols, int start_parity, std::vector<int>& removed) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = start_parity; i + 1 < cols.size(); i += 2) {
      if (cols[i] == cols[i + 1]) {
        removed.push_back(cols[i]);
        cols.erase(cols.begin() + i, cols.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

PairedColumns pair_columns(const OrbitDescriptor& o) {
  std::vector<int> cols = columns(o);
  PairedColumns pc;
  switch (o.algebra.family) {
    case Family::A:
      fail(Errc::BadInput, "pair_columns is undefined for type A");
    case Family::B: {
      remove_equal_pairs(cols, 0, pc.removed_equal_pairs);
      // (m_0)(m_1,m_2)...(m_{2p-1},m_{2p})
      pc.singleton = cols.empty() ? 0 : cols[0];
      for (std::size_t i = 1; i + 1 < cols.size(); i += 2)
        pc.pairs.emplace_back(cols[i], cols[i + 1]);
      break;
    }
    case Family::C: {
      remove_equal_pairs(cols, 1, pc.removed_equal_pairs);
      // (c_0,c_1)...(c_{2p-2},c_{2p-1})(c_{2p})
      for (std::size_t i = 0; i + 1 < cols.size(); i += 2)
        pc.pairs.emplace_back(cols[i], cols[i + 1]);
      pc.singleton = cols.empty() ? 0 : cols.back();
      break;
    }
    case Family::D: {
      remove_equal_pairs(cols, 0, pc.removed_equal_pairs);
      // (m_0,m_{2p-1})(m_1,m_2)...(m_{2p-3},m_{2p-2})
      pc.first_pair_spherical = true;
      if (!cols.empty()) {
        pc.pairs.emplace_back(cols.front(), cols.back());
        for (std::size_t i = 1; i + 2 < cols.size(); i += 2)
          pc.pairs.emplace_back(cols[i], cols[i + 1]);
      }
      break;
    }
  }
  // Parity sanity per the pairing rules.
  for (auto [a, b] : pc.pairs)
    if ((a - b) % 2 != 0)
      fail(Errc::ParityViolation, "pair members of different parity in " + o.to_string());
  return pc;
}

ComponentGroup component_group(const OrbitDescriptor& o) {
  ComponentGroup cg;
  if (o.algebra.family == Family::A) {
    cg.order = 1;
    cg.flavor_note = "GL";
    return cg;
  }
  int want = o.algebra.family == Family::C ? 0 : 1;  // parity of contributing sizes
  std::map<int, int> mult;
  for (int p : o.rows.parts) ++mult[p];
  for (auto it = mult.rbegin(); it != mult.rend(); ++it)
    if (it->first % 2 == want) cg.generators.push_back(it->first);
  std::size_t k = cg.generators.size();
  bool so_quotient = (o.algebra.family == Family::B || o.algebra.family == Family::D) &&
                     o.flavor == Flavor::SO;
  if (so_quotient) {
    cg.order = k >= 1 ? (std::int64_t{1} << (k - 1)) : 1;
    cg.flavor_note = "SO-subgroup";
  } else {
    cg.order = std::int64_t{1} << k;
    cg.flavor_note = o.algebra.family == Family::C ? "Sp" : "O-isogeny";
  }
  return cg;
}

namespace {

bool strict_boundaries(Family family, const std::vector<int>& cols) {
  // Strict descents at the pair boundaries of the Section 3.4 classes:
  // B: m_{2k} > m_{2k+1}; C: c_{2j-1} > c_{2j}; D: m_{2j} > m_{2j+1}.
  if (cols.empty()) return true;
  std::size_t start = family == Family::C ? 1 : 0;
  for (std::size_t i = start; i + 1 < cols.size(); i += 2)
    if (cols[i] <= cols[i + 1]) return false;
  return true;
}

}  // namespace

Classification classify(const OrbitDescriptor& o) {
  Classification c;
  if (o.algebra.family == Family::A) {
    c.stably_trivial = true;
    return c;
  }
  std::map<int, int> mult;
  for (int p : o.rows.parts) ++mult[p];
  int largest = o.rows.parts.empty() ? 0 : o.rows.parts[0];

  // Stably trivial, per the literal parity sentences of 2.5-2.7.
  switch (o.algebra.family) {
    case Family::B: {
      c.stably_trivial = true;
      for (auto [size, m] : mult)
        if (size % 2 != 0 && m % 2 != 0 && size != largest) c.stably_trivial = false;
      break;
    }
    case Family::C:
    case Family::D: {
      c.stably_trivial = true;
      for (auto [size, m] : mult)
        if (size % 2 == 0 && m % 2 != 0) c.stably_trivial = false;
      break;
    }
    default: break;
  }

  // Triangular staircase partitions.
  {
    std::vector<int> tri;
    switch (o.algebra.family) {
      case Family::B: {
        // (2m+1, 2m-1, 2m-1, ..., 3, 3, 1, 1)
        if (largest % 2 == 1) {
          tri.push_back(largest);
          for (int k = largest - 2; k >= 1; k -= 2) {
            tri.push_back(k);
            tri.push_back(k);
          }
        }
        break;
      }
      case Family::C: {
        // (2m, 2m, ..., 4, 4, 2, 2)
        if (largest % 2 == 0) {
          for (int k = largest; k >= 2; k -= 2) {
            tri.push_back(k);
            tri.push_back(k);
          }
        }
        break;
      }
      case Family::D: {
        // (2m-1, 2m-1, ..., 3, 3, 1, 1)
        if (largest % 2 == 1) {
          for (int k = largest; k >= 1; k -= 2) {
            tri.push_back(k);
            tri.push_back(k);
          }
        }
        break;
      }
      default: break;
    }
    c.triangular = !o.rows.parts.empty() && o.rows.parts == tri;
  }

  std::vector<int> cols = columns(o);

  // Smoothly cuspidal per the 5.8 lists: row multiplicities, column parity,
  // and strict descents of the relabeled pairing.
  {
    bool rows_ok = true;
    for (auto [size, m] : mult) {
      bool exempt = o.algebra.family == Family::B && size == largest;
      if (!exempt && m % 2 != 0) rows_ok = false;
    }
    int col_parity = o.algebra.family == Family::B ? 1 : 0;
    bool cols_ok = true;
    for (int csz : cols)
      if (csz != 0 && csz % 2 != col_parity % 2) cols_ok = false;
    PairedColumns pc = pair_columns(o);
    std::vector<int> relabeled;
    if (o.algebra.family == Family::B) {
      relabeled.push_back(pc.singleton.value_or(0));
      for (auto [a, b] : pc.pairs) {
        relabeled.push_back(a);
        relabeled.push_back(b);
      }
    } else if (o.algebra.family == Family::C) {
      for (auto [a, b] : pc.pairs) {
        relabeled.push_back(a);
        relabeled.push_back(b);
      }
      relabeled.push_back(pc.singleton.value_or(0));
    } else {
      // D written as (m_0, m_1, ..., m_{2p-1}) with the first-last pair split.
      if (!pc.pairs.empty()) {
        relabeled.push_back(pc.pairs[0].first);
        for (std::size_t i = 1; i < pc.pairs.size(); ++i) {
          relabeled.push_back(pc.pairs[i].first);
          relabeled.push_back(pc.pairs[i].second);
        }
        relabeled.push_back(pc.pairs[0].second);
      }
    }
    c.smoothly_cuspidal = rows_ok && cols_ok && strict_boundaries(o.algebra.family, relabeled);
  }

  // Chain admissible: strict inequalities on the padded column sequence itself
  // (no equal pairs survive, so pairing is the plain consecutive grouping).
  c.chain_admissible = strict_boundaries(o.algebra.family, cols);
  return c;
}

OrbitDescriptor orbit_from_columns(AlgebraType algebra, const std::vector<int>& cols,
                                   Flavor flavor, std::optional<VeryEven> label) {
  std::vector<int> c = cols;
  while (!c.empty() && c.back() == 0) c.pop_back();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] < c[i + 1]) fail(Errc::BadInput, "columns must be non-increasing");
  return validate_orbit(algebra, transpose(Partition(std::move(c))), flavor, label);
}

OrbitDescriptor remove_largest_column(const OrbitDescriptor& o) {
  if (o.algebra.family == Family::A)
    fail(Errc::BadInput, "remove_largest_column is undefined for type A");
  std::vector<int> cols = columns(o);
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  if (cols.empty()) fail(Errc::BadInput, "orbit is already zero in the trivial group");
  int removed = cols.front();
  cols.erase(cols.begin());
  int n2 = o.algebra.N - removed;
  AlgebraType alg2;
  if (o.algebra.family == Family::C) {
    alg2.family = n2 % 2 == 0 ? Family::D : Family::B;
    alg2.N = n2;
  } else {
    if (n2 % 2 != 0)
      fail(Errc::ResultInvalid, "orthogonal-to-symplectic step left odd size");
    alg2.family = Family::C;
    alg2.N = n2;
  }
  // Chains work with the full orthogonal group on B/D steps.
  Flavor fl2 = alg2.family == Family::C ? Flavor::Sp : Flavor::O;
  Partition rows2 = transpose(Partition(cols));
  if (!is_valid_partition_for(alg2.family, rows2))
    fail(Errc::ResultInvalid, "column removal left an invalid " +
                                  std::string(family_name(alg2.family)) + " partition " +
                                  rows2.to_string());
  return validate_orbit(alg2, rows2, fl2);
}

std::vector<ReductiveFactor> centralizer_reductive_type(const OrbitDescriptor& o) {
  std::vector<ReductiveFactor> out;
  if (o.algebra.family == Family::A) {
    std::map<int, int> mult;
    for (int p : o.rows.parts) ++mult[p];
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
      out.push_back({'G', it->second});  // GL(r) factors
    return out;
  }
  std::map<int, int> mult;
  for (int p : o.rows.parts) ++mult[p];
  bool symplectic = o.algebra.family == Family::C;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    auto [size, r] = *it;
    bool orth = symplectic ? (size % 2 == 0) : (size % 2 != 0);
    out.push_back({orth ? 'O' : 'S', r});
  }
  return out;
}

int algebra_dimension(AlgebraType a) {
  switch (a.family) {
    case Family::A: return a.N * a.N;
    case Family::B:
    case Family::D: return a.N * (a.N - 1) / 2;
    case Family::C: return a.N * (a.N + 1) / 2;
  }
  return 0;
}

int centralizer_dimension(const OrbitDescriptor& o) {
  Partition cols = transpose(o.rows);
  int sq = 0;
  for (int c : cols.parts) sq += c * c;
  int odd = 0;
  for (int p : o.rows.parts)
    if (p % 2 != 0) ++odd;
  switch (o.algebra.family) {
    case Family::A: return sq;
    case Family::C: return (sq + odd) / 2;
    case Family::B:
    case Family::D: return (sq - odd) / 2;
  }
  return 0;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<OrbitDescriptor> enumerate_orbits(Family family, int size, Flavor flavor) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  partitions_rec(size, size, cur, all);  // reverse-lex order by construction
  std::vector<OrbitDescriptor> out;
  AlgebraType alg{family, size};
  for (auto& p : all) {
    Partition rows(p);
    if (!is_valid_partition_for(family, rows)) continue;
    if (is_very_even(family, rows)) {
      out.push_back(validate_orbit(alg, rows, flavor, VeryEven::I));
      out.push_back(validate_orbit(alg, rows, flavor, VeryEven::II));
    } else {
      out.push_back(validate_orbit(alg, rows, flavor));
    }
  }
  return out;
}

}  // namespace orbitheta
