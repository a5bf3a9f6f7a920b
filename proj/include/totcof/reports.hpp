#pragma once

#include <optional>
#include <string>
#include <utility>

#include "totcof/derived_limits.hpp"
#include "totcof/diagram.hpp"
#include "totcof/poset.hpp"
#include "totcof/serialize.hpp"
#include "totcof/spectral.hpp"

namespace totcof {

/// Output of one job: a JSON document, a human-readable rendering of the same
/// content, and the verdict used by strict mode.
struct Report {
  Json json;
  std::string text;
  bool passed = true;
};

struct ReportOptions {
  Field field;
  /// Restricts reported degrees; total degree for ss.
  std::optional<std::pair<int, int>> degrees;
  /// Free-form description of the input, copied into the report.
  std::string input;
};

/// Sign, filtration and basis-order conventions every report carries.
Json conventions();

Report check_report(const PosetPair& pair, const ReportOptions& options);
/// H_* of N(C), N(D) and N(C)/N(D).
Report homology_report(const PosetPair& pair, const ReportOptions& options);
/// lim^p for one p, or for every p when `p` is empty.
Report limp_report(const AbelianDiagram& a, std::optional<int> p, const ReportOptions& options);
Report gamma_report(const DiagramOfComplexes& x, const PosetPair& pair, const ReportOptions& options);
Report holim_report(const DiagramOfComplexes& y, const ReportOptions& options);
/// Checks (P1) and (P2) first; a failing pair yields a refusal report with
/// passed == false.
Report verify_report(const DiagramOfComplexes& x, const PosetPair& pair, const ReportOptions& options);
/// Pages, E_infinity, the E_2 identity and the abutment checks. The pair is
/// used for the shift comparison when it records a ball dimension.
Report ss_report(const DiagramOfComplexes& y, const PosetPair* pair, int r_max, const ReportOptions& options);

/// Decimal string for integers, "a/b" otherwise.
std::string field_entry(const mpq_class& v);
Json field_matrix_to_json(const FieldMatrix& m);

}  // namespace totcof
