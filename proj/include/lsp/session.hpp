#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "lsp/solver.hpp"

namespace lsp {

inline std::string value_to_display(const Rational& v) { return format_rational(v); }
inline std::string value_to_display(double v) { return format_double(v); }

/// Live application of the optimal rule: the instance is solved once, then
/// the stream supplies one 0/1 outcome per index in order. The session is a
/// pure fold over the stream, so replaying a transcript reproduces it.
/// Malformed tokens re-prompt without advancing the index; the session ends
/// at the first STOP or after index n. Returns the emitted decision lines.
template <class T>
std::vector<std::string> advise_session(const ProblemInstance<T>& inst, std::istream& in, std::ostream& out) {
  const DpSolution<T> sol = solve(inst);
  std::vector<std::string> transcript;
  const int n = inst.n();
  for (int k = 1; k <= n; ++k) {
    bool success = false;
    for (;;) {
      out << "I_" << k << " = ? " << std::flush;
      std::string token;
      if (!(in >> token)) {
        out << "\n(end of input; session ends unpaid)\n";
        return transcript;
      }
      if (token == "0" || token == "1") {
        success = (token == "1");
        break;
      }
      out << "expected 0 or 1\n";
    }
    if (advise(sol, k, success) == Decision::Stop) {
      std::string line = "STOP e_stop(" + std::to_string(k) + ") = " +
                         value_to_display(sol.e_stop[static_cast<std::size_t>(k)]);
      out << line << "\n";
      transcript.push_back("STOP");
      return transcript;
    }
    out << "CONTINUE\n";
    transcript.push_back("CONTINUE");
  }
  return transcript;
}

}  // namespace lsp
