#pragma once

// Catalog of the special cases with only two (or four) nonzero parameters, and
// the closed forms printed for them, transcribed verbatim. Printed forms are
// never corrected here; errata.hpp compares them against the matrix path.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/state.hpp"

namespace qutrit {

enum class ClusterId { I, II, III, IV, V, VI, VII, FourVariable };

std::string_view cluster_name(ClusterId id);
std::optional<ClusterId> cluster_from_name(std::string_view name);

/// Slot names in order. Four-variable cases use (s, t, p, q).
inline constexpr std::array<std::string_view, 4> kSlotNames = {"s", "t", "p", "q"};

struct ClusterCase {
    ClusterId cluster = ClusterId::I;
    std::string sub_case;      // e.g. "(y,alpha2)"
    std::vector<Field> slots;  // slot i -> parameter field

    std::size_t arity() const { return slots.size(); }
};

/// Every printed case: 28 two-variable pairs across clusters I-VII, then the
/// three four-variable cases.
const std::vector<ClusterCase>& catalog();

std::vector<ClusterCase> cases_of(ClusterId id);

/// Throws UnknownCase. An empty `sub_case` selects the first case of the cluster.
const ClusterCase& find_case(ClusterId id, std::string_view sub_case = {});

/// The six groupings of cluster VI used by the second-inequality table.
struct ClusterViGrouping {
    std::string label;  // as printed
    std::vector<std::string> members;
};
const std::vector<ClusterViGrouping>& cluster_vi_groupings();

/// Slots filled from `values`, every other field zero. Throws ArityMismatch.
ParamVector instantiate(const ClusterCase& c, std::span<const double> values);

enum class Normalization { Ref8, ThisWork };

/// What a printed formula computes.
enum class Quantity { Ineq1Ref8, Ineq1ThisWork, Ineq2Ref8, Ineq2ThisWork, U1, U2, U3, F1, F2, F3 };

std::string_view quantity_name(Quantity q);

struct PrintedFormula {
    std::string table;  // "Table 5", "Table 5.2a", "Table 5.2b", "Table 5.3"
    std::string row;
    Quantity quantity = Quantity::U1;
    std::string printed;                 // transcription of the printed text
    ClusterId cluster = ClusterId::I;
    std::vector<std::string> sub_cases;  // cases this formula is printed for
    std::function<double(std::span<const double>)> evaluate;
};

const std::vector<PrintedFormula>& printed_formulas();

enum class Sense { LessEqual, GreaterEqual };

struct PrintedInequality {
    double value = 0.0;
    double bound = 0.0;
    Sense sense = Sense::LessEqual;

    bool admissible() const { return sense == Sense::LessEqual ? value <= bound : value >= bound; }
};

/// Printed inequality for a case. `inequality_index` is 1 or 2.
/// Throws NoPrintedForm when nothing is printed for that combination.
PrintedInequality printed_lhs(const ClusterCase& c, int inequality_index, Normalization norm,
                              std::span<const double> slot_values);

/// Value of any printed quantity for a case. Throws NoPrintedForm.
double printed_value(const ClusterCase& c, Quantity q, std::span<const double> slot_values);

}  // namespace qutrit
