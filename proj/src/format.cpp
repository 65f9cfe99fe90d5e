#include "ellconf/format.hpp"

#include <sstream>

#include "../vendor/json.hpp"

namespace ellconf {

using nlohmann::json;

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "latex") return Format::Latex;
  return std::nullopt;
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Latex: return "latex";
  }
  return "?";
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// one power of a variable: "", "t", "t^2" (latex: "t^{2}")
std::string var_pow(const std::string& var, int e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return var;
  return latex ? var + "^{" + std::to_string(e) + "}"
               : var + "^" + std::to_string(e);
}

// "c m" with the usual conventions: coefficient 1/-1 elided before a
// nonempty monomial part, "+"/"-" joining handled by the caller
std::string term(long long c, const std::string& mono) {
  if (mono.empty()) return std::to_string(c);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return std::to_string(c) + mono;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i][0] == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out;
}

std::string poly1_text(const Poly1& p, bool latex) {
  std::vector<std::string> terms;
  for (auto& [d, c] : p)
    if (c != 0) terms.push_back(term(c, var_pow("t", d, latex)));
  return join_terms(terms);
}

std::string poly2_text(const Poly2& p, bool latex) {
  std::vector<std::string> terms;
  for (auto& [uv, c] : p)
    if (c != 0)
      terms.push_back(
          term(c, var_pow("u", uv.first, latex) + var_pow("v", uv.second, latex)));
  return join_terms(terms);
}

// "V_0 + 2V_1" (latex keeps the subscript braces)
std::string irrep_sum(const std::map<int, int>& irreps, bool latex) {
  std::vector<std::string> terms;
  for (auto& [k, mult] : irreps) {
    if (mult == 0) continue;
    std::string v = latex ? "V_{" + std::to_string(k) + "}"
                          : "V_" + std::to_string(k);
    terms.push_back(term(mult, v));
  }
  return join_terms(terms);
}

std::string groth_text(const GrothPoly& g, bool latex) {
  std::vector<std::string> terms;
  for (auto& [uv, irreps] : g) {
    std::string cell = irrep_sum(irreps, latex);
    if (cell == "0") continue;
    std::string mono =
        var_pow("u", uv.first, latex) + var_pow("v", uv.second, latex);
    if (mono.empty()) {
      terms.push_back("[" + cell + "]");
    } else {
      terms.push_back("[" + cell + "]" + mono);
    }
  }
  return join_terms(terms);
}

// weight grid in the style of a bigraded cohomology table: one row per
// v-exponent (descending), one column per u-exponent, entries irrep sums
std::string groth_latex(const GrothPoly& g) {
  int umax = 0, vmax = 0;
  for (auto& [uv, irreps] : g) {
    umax = std::max(umax, uv.first);
    vmax = std::max(vmax, uv.second);
  }
  std::ostringstream os;
  os << "\\begin{array}{c|";
  for (int u = 0; u <= umax; ++u) os << "c";
  os << "}\n";
  for (int v = vmax; v >= 0; --v) {
    os << v;
    for (int u = 0; u <= umax; ++u) {
      os << " & ";
      auto it = g.find({u, v});
      if (it != g.end() && !it->second.empty())
        os << irrep_sum(it->second, true);
    }
    os << " \\\\\n";
  }
  os << "\\hline\n & ";
  for (int u = 0; u <= umax; ++u) {
    os << u;
    if (u < umax) os << " & ";
  }
  os << "\n\\end{array}\n";
  return os.str();
}

json header_json(const std::string& command, int n) {
  json j;
  j["command"] = command;
  j["n"] = n;
  return j;
}

}  // namespace

std::string render_betti(Space s, int n, const Poly1& p, Format f) {
  switch (f) {
    case Format::Text:
      return poly1_text(p, false) + "\n";
    case Format::Latex:
      return "$" + poly1_text(p, true) + "$\n";
    case Format::Csv: {
      std::ostringstream os;
      os << "degree,coefficient\n";
      for (auto& [d, c] : p) os << d << "," << c << "\n";
      return os.str();
    }
    case Format::Json: {
      json j = header_json("betti", n);
      j["space"] = to_string(s);
      j["variable"] = "t";
      json coeffs = json::object();
      for (auto& [d, c] : p) coeffs[std::to_string(d)] = c;
      j["coefficients"] = coeffs;
      return j.dump(2) + "\n";
    }
  }
  return "";
}

std::string render_hodge(Space s, int n, const Poly2& p, Format f) {
  switch (f) {
    case Format::Text:
      return poly2_text(p, false) + "\n";
    case Format::Latex:
      return "$" + poly2_text(p, true) + "$\n";
    case Format::Csv: {
      std::ostringstream os;
      os << "u,v,coefficient\n";
      for (auto& [uv, c] : p)
        os << uv.first << "," << uv.second << "," << c << "\n";
      return os.str();
    }
    case Format::Json: {
      json j = header_json("hodge", n);
      j["space"] = to_string(s);
      j["variables"] = {"u", "v"};
      json terms = json::array();
      for (auto& [uv, c] : p)
        terms.push_back({{"u", uv.first}, {"v", uv.second}, {"coefficient", c}});
      j["terms"] = terms;
      return j.dump(2) + "\n";
    }
  }
  return "";
}

std::string render_groth(Space s, int n, const GrothPoly& g, Format f) {
  switch (f) {
    case Format::Text:
      return groth_text(g, false) + "\n";
    case Format::Latex:
      return groth_latex(g);
    case Format::Csv: {
      std::ostringstream os;
      os << "u,v,irrep,multiplicity\n";
      for (auto& [uv, irreps] : g)
        for (auto& [k, mult] : irreps)
          if (mult != 0)
            os << uv.first << "," << uv.second << "," << k << "," << mult
               << "\n";
      return os.str();
    }
    case Format::Json: {
      json j = header_json("hodge", n);
      j["space"] = to_string(s);
      j["grothendieck"] = true;
      json terms = json::array();
      for (auto& [uv, irreps] : g) {
        json cell = json::object();
        for (auto& [k, mult] : irreps)
          if (mult != 0) cell[std::to_string(k)] = mult;
        if (cell.empty()) continue;
        terms.push_back({{"u", uv.first}, {"v", uv.second}, {"irreps", cell}});
      }
      j["terms"] = terms;
      return j.dump(2) + "\n";
    }
  }
  return "";
}

std::string render_basis(const BasisListing& b, Format f) {
  switch (f) {
    case Format::Text: {
      std::ostringstream os;
      os << to_string(b.model) << "^{" << b.p << "," << b.q << "}, n=" << b.n
         << ": dimension " << b.dim;
      if (b.oracle_dim)
        os << " (oracle: " << *b.oracle_dim
           << (b.dim == *b.oracle_dim ? ", agrees)" : ", DISAGREES)");
      os << "\n";
      for (size_t i = 0; i < b.monomials.size(); ++i)
        os << "  [" << i << "] " << b.monomials[i] << "\n";
      return os.str();
    }
    case Format::Latex: {
      std::ostringstream os;
      os << "\\begin{tabular}{rl}\n";
      for (size_t i = 0; i < b.monomials.size(); ++i)
        os << i << " & $" << b.monomials[i] << "$ \\\\\n";
      os << "\\end{tabular}\n";
      return os.str();
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "index,monomial\n";
      for (size_t i = 0; i < b.monomials.size(); ++i)
        os << i << "," << csv_quote(b.monomials[i]) << "\n";
      return os.str();
    }
    case Format::Json: {
      json j = header_json("basis", b.n);
      j["model"] = to_string(b.model);
      j["p"] = b.p;
      j["q"] = b.q;
      j["dimension"] = b.dim;
      if (b.oracle_dim) j["oracle_dimension"] = *b.oracle_dim;
      j["monomials"] = b.monomials;
      return j.dump(2) + "\n";
    }
  }
  return "";
}

std::string render_decompose(const DecomposeResult& d, Format f) {
  switch (f) {
    case Format::Text: {
      std::ostringstream os;
      os << "A^{" << d.p << "," << d.q << "}, n=" << d.n << ": dimension "
         << d.dim << "\n";
      os << "weights:";
      for (auto& [w, c] : d.weight_dims) os << " " << w << ":" << c;
      os << "\nirreducibles:";
      for (auto& [k, mult] : d.irreps)
        if (mult != 0) os << " " << term(mult, "V_" + std::to_string(k));
      os << "\n";
      return os.str();
    }
    case Format::Latex: {
      std::ostringstream os;
      os << "$A^{" << d.p << "," << d.q << "} = "
         << irrep_sum(d.irreps, true) << "$\n";
      return os.str();
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "kind,index,value\n";
      for (auto& [w, c] : d.weight_dims) os << "weight," << w << "," << c << "\n";
      for (auto& [k, mult] : d.irreps)
        if (mult != 0) os << "irrep," << k << "," << mult << "\n";
      return os.str();
    }
    case Format::Json: {
      json j = header_json("decompose", d.n);
      j["p"] = d.p;
      j["q"] = d.q;
      j["dimension"] = d.dim;
      json w = json::object(), ir = json::object();
      for (auto& [wt, c] : d.weight_dims) w[std::to_string(wt)] = c;
      for (auto& [k, mult] : d.irreps)
        if (mult != 0) ir[std::to_string(k)] = mult;
      j["weight_dimensions"] = w;
      j["irreducibles"] = ir;
      return j.dump(2) + "\n";
    }
  }
  return "";
}

std::string partition_string(const MarkedPartition& mp) {
  std::string out;
  for (auto& [size, mark] : mp.parts) {
    if (!out.empty()) out += " ";
    out += std::to_string(size);
    if (mark != Mark::One) out += "^" + std::string(mark_name(mark));
  }
  return out.empty() ? "()" : out;
}

std::string render_partitions(const PartitionTable& t, Format f) {
  switch (f) {
    case Format::Text: {
      std::ostringstream os;
      os << "marked partitions for n=" << t.n << ", p=" << t.p
         << ", q=" << t.q << "\n";
      for (const PartitionRow& r : t.rows)
        os << "  " << partition_string(r.partition) << "  z_order="
           << r.z_order << "  induced_dim=" << r.induced_dim
           << (r.xi_trivial ? "  trivial" : "") << "\n";
      os << "total dimension " << t.total_dim << ", invariant dimension "
         << t.invariant_dim << "\n";
      return os.str();
    }
    case Format::Latex: {
      std::ostringstream os;
      os << "\\begin{tabular}{lrrc}\n"
         << "partition & $|Z|$ & induced & trivial \\\\\n\\hline\n";
      for (const PartitionRow& r : t.rows)
        os << "$" << partition_string(r.partition) << "$ & " << r.z_order
           << " & " << r.induced_dim << " & " << (r.xi_trivial ? "yes" : "no")
           << " \\\\\n";
      os << "\\end{tabular}\n";
      return os.str();
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "partition,z_order,xi_trivial,induced_dim\n";
      for (const PartitionRow& r : t.rows)
        os << csv_quote(partition_string(r.partition)) << "," << r.z_order
           << "," << (r.xi_trivial ? "true" : "false") << "," << r.induced_dim
           << "\n";
      return os.str();
    }
    case Format::Json: {
      json j = header_json("partitions", t.n);
      j["p"] = t.p;
      j["q"] = t.q;
      json rows = json::array();
      for (const PartitionRow& r : t.rows) {
        json parts = json::array();
        for (auto& [size, mark] : r.partition.parts)
          parts.push_back({{"size", size}, {"mark", mark_name(mark)}});
        rows.push_back({{"parts", parts},
                        {"z_order", r.z_order},
                        {"xi_trivial", r.xi_trivial},
                        {"induced_dim", r.induced_dim}});
      }
      j["partitions"] = rows;
      j["total_dimension"] = t.total_dim;
      j["invariant_dimension"] = t.invariant_dim;
      return j.dump(2) + "\n";
    }
  }
  return "";
}

namespace {

std::string checks_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.details.empty()) os << "  (" << c.details << ")";
    os << "\n";
  }
  return os.str();
}

std::string checks_csv(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "name,claim,pass,details\n";
  for (const Check& c : checks)
    os << csv_quote(c.name) << "," << csv_quote(c.claim) << ","
       << (c.pass ? "true" : "false") << "," << csv_quote(c.details) << "\n";
  return os.str();
}

std::string checks_latex(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "\\begin{tabular}{lc}\ncheck & status \\\\\n\\hline\n";
  for (const Check& c : checks)
    os << c.name << " & " << (c.pass ? "pass" : "fail") << " \\\\\n";
  os << "\\end{tabular}\n";
  return os.str();
}

json checks_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const Check& c : checks)
    arr.push_back({{"name", c.name},
                   {"claim", c.claim},
                   {"pass", c.pass},
                   {"details", c.details}});
  return arr;
}

}  // namespace

std::string render_classes(const ClassesSummary& c, Format f) {
  switch (f) {
    case Format::Text: {
      std::ostringstream os;
      os << "distinguished classes for n=" << c.n << "\n";
      for (auto& [name, desc] : c.classes) os << "  " << name << ": " << desc << "\n";
      os << checks_text(c.checks);
      return os.str();
    }
    case Format::Latex:
      return checks_latex(c.checks);
    case Format::Csv:
      return checks_csv(c.checks);
    case Format::Json: {
      json j = header_json("classes", c.n);
      json cl = json::array();
      for (auto& [name, desc] : c.classes)
        cl.push_back({{"name", name}, {"description", desc}});
      j["classes"] = cl;
      j["checks"] = checks_json(c.checks);
      bool pass = std::all_of(c.checks.begin(), c.checks.end(),
                              [](const Check& k) { return k.pass; });
      j["pass"] = pass;
      return j.dump(2) + "\n";
    }
  }
  return "";
}

std::string render_report(const VerificationReport& r, Format f) {
  switch (f) {
    case Format::Text: {
      std::ostringstream os;
      os << "suite " << r.suite << ", n=" << r.n << "\n"
         << checks_text(r.checks)
         << (r.pass() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
      return os.str();
    }
    case Format::Latex:
      return checks_latex(r.checks);
    case Format::Csv:
      return checks_csv(r.checks);
    case Format::Json: {
      json j = header_json("verify", r.n);
      j["suite"] = r.suite;
      j["pass"] = r.pass();
      j["checks"] = checks_json(r.checks);
      return j.dump(2) + "\n";
    }
  }
  return "";
}

}  // namespace ellconf
