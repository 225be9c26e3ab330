#pragma once

#include <string>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

struct NamedSet {
  std::string name;
  VertexSet set;

  friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

/// Outcome of checking one clause of a statement on one instance.
///
/// applicable == false means the hypotheses failed; such a verdict always
/// holds. evaluable == false marks an applicable clause whose conclusion
/// cannot be stated for this instance (e.g. a cut of non-integral size); it
/// is not counted as a failure. When holds == false, `evidence` is the
/// counter-evidence; otherwise it is whatever supporting sets were found.
struct ClauseVerdict {
  std::string clause;
  bool applicable = false;
  bool holds = true;
  bool evaluable = true;
  std::string note;
  std::vector<NamedSet> evidence;

  bool failed() const { return applicable && evaluable && !holds; }

  static ClauseVerdict vacuous(std::string clause, std::string note) {
    ClauseVerdict v;
    v.clause = std::move(clause);
    v.note = std::move(note);
    return v;
  }

  friend bool operator==(const ClauseVerdict&, const ClauseVerdict&) = default;
};

}  // namespace tough
