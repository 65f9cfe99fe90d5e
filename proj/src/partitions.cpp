#include "ellconf/partitions.hpp"

#include <algorithm>

namespace ellconf {

int mark_degree(Mark h) {
  switch (h) {
    case Mark::One: return 0;
    case Mark::X: return 1;
    case Mark::Y: return 1;
    case Mark::XY: return 2;
  }
  return 0;
}

int mark_weight(Mark h) {
  return h == Mark::X ? 1 : h == Mark::Y ? -1 : 0;
}

std::string mark_name(Mark h) {
  switch (h) {
    case Mark::One: return "1";
    case Mark::X: return "x";
    case Mark::Y: return "y";
    case Mark::XY: return "xy";
  }
  return "?";
}

int MarkedPartition::n() const {
  int s = 0;
  for (auto& [size, mark] : parts) s += size;
  return s;
}

int MarkedPartition::edge_count() const {
  return n() - static_cast<int>(parts.size());
}

int MarkedPartition::letter_count() const {
  int s = 0;
  for (auto& [size, mark] : parts) s += mark_degree(mark);
  return s;
}

int MarkedPartition::weight() const {
  int s = 0;
  for (auto& [size, mark] : parts) s += mark_weight(mark);
  return s;
}

std::vector<MarkedPartition> enumerate_marked(int n, int p, int q) {
  std::vector<MarkedPartition> out;
  if (q < 0 || q > n - 1 || p < 0) return out;
  int t = n - q;  // number of parts
  MarkedPartition cur;
  // parts weakly decreasing; among equal sizes marks weakly decreasing
  auto rec = [&](auto&& self, int rest, int nparts, int deg_left) -> void {
    if (nparts == 0) {
      if (rest == 0 && deg_left == 0) out.push_back(cur);
      return;
    }
    if (rest < nparts || deg_left < 0 || deg_left > 2 * nparts) return;
    int max_size = cur.parts.empty() ? rest : cur.parts.back().first;
    for (int size = std::min(max_size, rest - nparts + 1); size >= 1; --size)
      for (int mk = 3; mk >= 0; --mk) {
        Mark mark = static_cast<Mark>(mk);
        if (!cur.parts.empty() && cur.parts.back().first == size &&
            static_cast<int>(cur.parts.back().second) < mk)
          continue;
        cur.parts.emplace_back(size, mark);
        self(self, rest - size, nparts - 1, deg_left - mark_degree(mark));
        cur.parts.pop_back();
      }
  };
  if (t >= 1) rec(rec, n, t, p);
  return out;
}

StabilizerInfo stabilizer(const MarkedPartition& mp) {
  StabilizerInfo s;
  std::map<std::pair<int, Mark>, int> mult;
  for (auto& part : mp.parts) {
    s.c_order *= part.first;
    ++mult[part];
  }
  for (auto& [cls, m] : mult)
    for (int i = 2; i <= m; ++i) s.n_order *= i;
  s.z_order = s.c_order * s.n_order;
  return s;
}

long long induced_dim(const MarkedPartition& mp) {
  long long fact = 1;
  for (int i = 2; i <= mp.n(); ++i) fact *= i;
  return fact / stabilizer(mp).z_order;
}

bool xi_is_trivial(const MarkedPartition& mp) {
  std::map<std::pair<int, Mark>, int> mult;
  for (auto& [size, mark] : mp.parts) {
    if (size > 2) return false;  // the cyclic character is faithful for k >= 3
    ++mult[{size, mark}];
  }
  for (auto& [cls, m] : mult) {
    if (m < 2) continue;
    int exponent = cls.first + mark_degree(cls.second) + 1;
    if (exponent % 2 != 0) return false;  // swapping two equal blocks flips sign
  }
  return true;
}

long long slice_dimension_oracle(int n, int p, int q) {
  long long s = 0;
  for (const auto& mp : enumerate_marked(n, p, q)) s += induced_dim(mp);
  return s;
}

long long invariant_dimension_oracle(int n, int p, int q) {
  long long s = 0;
  for (const auto& mp : enumerate_marked(n, p, q)) s += xi_is_trivial(mp);
  return s;
}

std::map<int, long long> weight_dimension_oracle(int n, int p, int q) {
  std::map<int, long long> out;
  for (const auto& mp : enumerate_marked(n, p, q))
    out[mp.weight()] += induced_dim(mp);
  return out;
}

}  // namespace ellconf
