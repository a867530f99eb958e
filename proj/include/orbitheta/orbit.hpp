#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitheta/error.hpp"

namespace orbitheta {

enum class Family { A, B, C, D };
enum class Flavor { SO, O, Sp, Spin, Pin, GL };
enum class VeryEven { I, II };

const char* family_name(Family f);
const char* flavor_name(Flavor f);
Family parse_family(const std::string& s);
Flavor parse_flavor(const std::string& s);

// Classical algebra: gl(N) for A, so(N) with N odd for B, sp(N) with N even
// for C, so(N) with N even for D.
struct AlgebraType {
  Family family = Family::C;
  int N = 0;

  int rank() const {
    switch (family) {
      case Family::A: return N;
      case Family::B: return (N - 1) / 2;
      case Family::C: return N / 2;
      case Family::D: return N / 2;
    }
    return 0;
  }
  bool operator==(const AlgebraType& o) const { return family == o.family && N == o.N; }
  std::string name() const;
};

// A partition: strictly positive, non-increasing parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int sum() const;
  bool empty() const { return parts.empty(); }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  std::string to_string() const;
};

Partition transpose(const Partition& p);

struct OrbitDescriptor {
  AlgebraType algebra;
  Partition rows;
  Flavor flavor = Flavor::Sp;
  std::optional<VeryEven> very_even_label;

  bool operator==(const OrbitDescriptor& o) const {
    return algebra == o.algebra && rows == o.rows && flavor == o.flavor &&
           very_even_label == o.very_even_label;
  }
  std::string to_string() const;
};

// Column pairing per the family rules: equal pairs removed at the family's
// index parity, the remainder relabeled and grouped. For family D the
// (m_0, m_{2p-1}) pair sits at pairs[0] and carries no eta sign.
struct PairedColumns {
  std::vector<int> removed_equal_pairs;          // one size per removed pair
  std::vector<std::pair<int, int>> pairs;        // same-parity column pairs
  std::optional<int> singleton;                  // B: m_0; C: c_{2p}
  bool first_pair_spherical = false;             // D: pairs[0] is (m_0, m_{2p-1})

  // Pairs that carry an eta sign.
  std::vector<std::pair<int, int>> eta_pairs() const {
    auto v = pairs;
    if (first_pair_spherical && !v.empty()) v.erase(v.begin());
    return v;
  }
};

struct ComponentGroup {
  std::vector<int> generators;  // distinct parity-relevant row sizes, descending
  std::int64_t order = 1;       // 2^(#generators), or the SO quotient order
  std::string flavor_note;      // "O-isogeny" or "SO-subgroup"
};

struct Classification {
  bool stably_trivial = false;
  bool triangular = false;
  bool smoothly_cuspidal = false;
  bool chain_admissible = false;
};

struct ReductiveFactor {
  char kind;  // 'O' or 'S' (Sp)
  int size;
};

// Validates the parity-multiplicity rule for the family and the size. For
// type D partitions whose columns all pair up, a very-even label is required.
OrbitDescriptor validate_orbit(AlgebraType algebra, const Partition& rows,
                               Flavor flavor = Flavor::Sp,
                               std::optional<VeryEven> label = std::nullopt);

bool is_valid_partition_for(Family family, const Partition& rows);
bool is_very_even(Family family, const Partition& rows);

// Transpose of rows, zero-padded to odd length (B, C) or even length (D).
std::vector<int> columns(const OrbitDescriptor& o);

PairedColumns pair_columns(const OrbitDescriptor& o);

ComponentGroup component_group(const OrbitDescriptor& o);

Classification classify(const OrbitDescriptor& o);

// Columns minus the largest; the family alternates C <-> B/D.
OrbitDescriptor remove_largest_column(const OrbitDescriptor& o);

std::vector<ReductiveFactor> centralizer_reductive_type(const OrbitDescriptor& o);

// dim of the centralizer of a representative, by the classical formula
// (1/2) * (sum of squared columns (+/-) #odd rows).
int centralizer_dimension(const OrbitDescriptor& o);
int algebra_dimension(AlgebraType a);

// All valid orbits of the family with |rows| = size, reverse-lex row order.
// Type D very-even partitions yield two labeled descriptors.
std::vector<OrbitDescriptor> enumerate_orbits(Family family, int size,
                                              Flavor flavor = Flavor::Sp);

// Helper for building descriptors from a column list.
OrbitDescriptor orbit_from_columns(AlgebraType algebra, const std::vector<int>& cols,
                                   Flavor flavor = Flavor::Sp,
                                   std::optional<VeryEven> label = std::nullopt);

}  // namespace orbitheta
