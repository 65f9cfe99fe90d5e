#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellconf/cohomology.hpp"
#include "ellconf/partitions.hpp"
#include "ellconf/verify.hpp"

namespace ellconf {

enum class Format { Text, Json, Csv, Latex };
std::optional<Format> parse_format(const std::string& s);
std::string to_string(Format f);

// polynomial renderers; text mode follows the convention
//   "1 + 2t + 3t^2", "1 + 2uv + u^2v^3", "[V_0] + [V_1]uv"
std::string render_betti(Space s, int n, const Poly1& p, Format f);
std::string render_hodge(Space s, int n, const Poly2& p, Format f);
std::string render_groth(Space s, int n, const GrothPoly& g, Format f);

struct BasisListing {
  ModelId model = ModelId::A;
  int n = 0, p = 0, q = 0;
  long dim = 0;
  std::vector<std::string> monomials;
  std::optional<long> oracle_dim;
};
std::string render_basis(const BasisListing& b, Format f);

struct DecomposeResult {
  int n = 0, p = 0, q = 0, dim = 0;
  std::map<int, int> weight_dims;  // torus weight -> dimension
  std::map<int, int> irreps;       // k -> multiplicity of V_k
};
std::string render_decompose(const DecomposeResult& d, Format f);

struct PartitionRow {
  MarkedPartition partition;
  long long z_order = 0;
  bool xi_trivial = false;
  long long induced_dim = 0;
};
struct PartitionTable {
  int n = 0, p = 0, q = 0;
  std::vector<PartitionRow> rows;
  long long total_dim = 0;      // sum of induced dimensions
  long long invariant_dim = 0;  // number of trivial-character rows
};
std::string render_partitions(const PartitionTable& t, Format f);
// compact text form of one marked partition, e.g. "3^xy 2^x 1 1"
std::string partition_string(const MarkedPartition& mp);

struct ClassesSummary {
  int n = 0;
  // class name -> short description (bidegree and term count)
  std::vector<std::pair<std::string, std::string>> classes;
  std::vector<Check> checks;  // coefficient extractions vs closed forms
};
std::string render_classes(const ClassesSummary& c, Format f);

std::string render_report(const VerificationReport& r, Format f);

}  // namespace ellconf
