#pragma once

// CNF formulas and the DIMACS text format.
//
//   p cnf <num_vars> <num_clauses>
//   <lit> <lit> ... 0
//
// One clause per line, literals separated by single spaces, '\n' line ends,
// no comment lines. The writer is byte-deterministic.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "s2flow/errors.hpp"

namespace s2flow {

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  void validate() const {
    for (std::size_t c = 0; c < clauses.size(); ++c)
      for (int lit : clauses[c])
        if (lit == 0 || lit > num_vars || -lit > num_vars)
          throw DomainError("CnfFormula: clause " + std::to_string(c) + " has invalid literal " + std::to_string(lit));
  }

  void write_dimacs(std::ostream& os) const {
    os << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& c : clauses) {
      for (int lit : c) os << lit << ' ';
      os << "0\n";
    }
  }

  std::string to_dimacs() const {
    std::ostringstream os;
    write_dimacs(os);
    return os.str();
  }

  /// True iff every clause has a literal made true by model (1-based).
  bool satisfied_by(const std::vector<bool>& model) const {
    for (const auto& c : clauses) {
      bool sat = false;
      for (int lit : c) {
        auto v = static_cast<std::size_t>(lit > 0 ? lit : -lit);
        if (v < model.size() && model[v] == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  }
};

/// Reads DIMACS CNF; comment lines ("c ...") are skipped.
inline CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  bool header = false;
  long declared = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      if (!(ls >> p >> cnf >> f.num_vars >> declared) || cnf != "cnf") throw ParseError("DIMACS: bad header: " + line);
      header = true;
      continue;
    }
    if (!header) throw ParseError("DIMACS: clause before header");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) throw ParseError("DIMACS: unterminated clause");
  if (static_cast<long>(f.clauses.size()) != declared)
    throw ParseError("DIMACS: header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  f.validate();
  return f;
}

}  // namespace s2flow
