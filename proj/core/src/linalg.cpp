#include "stdbases/linalg.hpp"

#include "stdbases/errors.hpp"

namespace stdbases {

RowSpace::Row RowSpace::reduced(Row row) const {
    for (auto it = row.begin(); it != row.end();) {
        auto pivot_row = rows_.find(it->first);
        if (pivot_row == rows_.end()) {
            ++it;
            continue;
        }
        Rational factor = it->second;
        for (const auto& [col, val] : pivot_row->second) {
            auto entry = row.find(col);
            if (entry == row.end()) {
                Rational v = -factor * val;
                if (v != 0) row.emplace(col, std::move(v));
            } else {
                entry->second -= factor * val;
                if (entry->second == 0) row.erase(entry);
            }
        }
        // everything before the pivot column is untouched; restart at it
        it = row.lower_bound(pivot_row->first);
    }
    return row;
}

bool RowSpace::insert(Row row) {
    row = reduced(std::move(row));
    if (row.empty()) return false;
    int pivot = row.begin()->first;
    Rational inv = 1 / row.begin()->second;
    for (auto& [col, val] : row) val *= inv;
    // back-substitute into existing rows so the basis stays fully reduced
    for (auto& [p, existing] : rows_) {
        auto entry = existing.find(pivot);
        if (entry == existing.end()) continue;
        Rational factor = entry->second;
        for (const auto& [col, val] : row) {
            auto e = existing.find(col);
            if (e == existing.end()) {
                Rational v = -factor * val;
                if (v != 0) existing.emplace(col, std::move(v));
            } else {
                e->second -= factor * val;
                if (e->second == 0) existing.erase(e);
            }
        }
    }
    rows_.emplace(pivot, std::move(row));
    return true;
}

bool RowSpace::contains(Row row) const { return reduced(std::move(row)).empty(); }

std::vector<std::vector<Rational>> matrix_inverse(const std::vector<std::vector<Rational>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a = m;
    std::vector<std::vector<Rational>> inv(static_cast<std::size_t>(n),
                                           std::vector<Rational>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != n)
            throw Error("matrix is not square");
        inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) throw Error("matrix is singular");
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
        std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        Rational d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int c = 0; c < n; ++c) {
            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) {
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
                inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            }
        }
    }
    return inv;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
    RowSpace rs;
    for (auto& row : m) {
        RowSpace::Row sparse;
        for (int c = 0; c < static_cast<int>(row.size()); ++c)
            if (row[static_cast<std::size_t>(c)] != 0)
                sparse.emplace(c, row[static_cast<std::size_t>(c)]);
        rs.insert(std::move(sparse));
    }
    return rs.rank();
}

}  // namespace stdbases
