#pragma once

#include <optional>
#include <string>
#include <vector>

#include "totcof/lattice.hpp"
#include "totcof/poset.hpp"

namespace totcof {

enum class Condition { p1, p2, p1_strong, p2_strong };
std::string condition_name(Condition c);

/// First nonzero homology group found on the complex that decides a check.
struct Witness {
  Condition condition = Condition::p1;
  std::string element;
  /// Which complex carried the group, e.g. "N(C)/N(C^F)".
  std::string complex;
  int degree = 0;
  GroupStructure group;
};

enum class VerdictStatus { pass, fail, skipped };
std::string status_name(VerdictStatus s);

struct Verdict {
  std::size_t element = 0;
  std::string label;
  VerdictStatus status = VerdictStatus::skipped;
  std::optional<Witness> witness;
};

struct ConditionReport {
  std::vector<Verdict> p1;
  std::vector<Verdict> p2;
  std::vector<Verdict> p1_strong;
  std::vector<Verdict> p2_strong;
  bool p1_holds = true;
  bool p2_holds = true;
  bool p1_strong_holds = true;
  bool p2_strong_holds = true;
  /// false when checks stopped at the first failure
  bool complete = true;

  std::vector<Witness> witnesses() const;
  /// (P1) and (P2) both hold, so holim and the total cofibre agree.
  bool equivalence_holds() const { return p1_holds && p2_holds; }
};

/// Each check visits F in element order. With early_exit the first failure
/// ends the loop and the remaining verdicts stay `skipped`.
std::vector<Verdict> check_p1(const PosetPair& pair, bool early_exit = false);
std::vector<Verdict> check_p2(const PosetPair& pair, bool early_exit = false);

/// Homological shadows of the stronger conditions: inclusion N(C^F) -> N(C)
/// for F in D, and N(D) -> N(C^F) for F outside D, must be homology
/// isomorphisms.
std::vector<Verdict> check_strong_p1(const PosetPair& pair, bool early_exit = false);
std::vector<Verdict> check_strong_p2(const PosetPair& pair, bool early_exit = false);

struct ClassifyOptions {
  bool early_exit = false;
  bool include_strong = true;
};

ConditionReport classify_pair(const PosetPair& pair, const ClassifyOptions& options = {});

}  // namespace totcof
