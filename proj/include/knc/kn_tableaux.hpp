#pragma once

#include "knc/column_ops.hpp"
#include "knc/tableau.hpp"

namespace knc {

// Split form: every column C replaced by the pair lC rC on the same rows;
// the result has twice as many columns.  Throws input_error naming the
// offending column when one is not admissible.
Tableau split_form(const Tableau& t, int n);

enum class KnStatus {
    ok,
    column_not_increasing,
    row_not_increasing,
    column_not_admissible,
    split_not_semistandard,
};

struct KnCheck {
    KnStatus status = KnStatus::ok;
    int column = 0;     // 1-based offending column, when applicable
    int failure_z = 0;  // admissibility witness, when applicable
    std::string detail;

    explicit operator bool() const { return status == KnStatus::ok; }
};

// A filling is a KN tableau iff it is semistandard and its split form is
// semistandard.  Accepts arbitrary fillings; never throws on bad order.
KnCheck check_kn(const Tableau& t, int n);
bool is_kn(const Tableau& t, int n);

// KN(lambda, n), generated as the crystal closure of the key tableau of
// lambda under the lowering operators; canonically ordered.
std::vector<Tableau> enumerate_kn(const Partition& shape, int n);

// Brute-force enumeration of all KN fillings of a (skew) shape; intended for
// small shapes and used as the test oracle for the closure generator.
std::vector<Tableau> enumerate_kn_skew(const SkewShape& shape, int n);

}  // namespace knc
