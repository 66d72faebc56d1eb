#pragma once

#include "stdbases/rational.hpp"

#include <map>
#include <vector>

namespace stdbases {

/// Incrementally maintained row-reduced span of sparse rational vectors over
/// a fixed column universe. Pivots are the leftmost nonzero entries; stored
/// rows are fully reduced against each other with pivot coefficient 1.
class RowSpace {
public:
    using Row = std::map<int, Rational>;  // column -> nonzero coefficient

    /// Reduces `row` against the span; if a nonzero remainder survives it is
    /// inserted and true is returned.
    bool insert(Row row);

    /// True iff the row lies in the current span.
    bool contains(Row row) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    /// Pivot column -> reduced row, ascending by pivot.
    const std::map<int, Row>& rows() const { return rows_; }

private:
    Row reduced(Row row) const;
    std::map<int, Row> rows_;
};

/// Inverse of a square rational matrix; throws on singular input.
std::vector<std::vector<Rational>> matrix_inverse(const std::vector<std::vector<Rational>>& m);

int matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace stdbases
