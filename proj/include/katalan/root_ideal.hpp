#pragma once

#include <optional>
#include <vector>

#include "katalan/combinatorics.hpp"

namespace katalan {

// A positive root (i, j) of Delta_ell^+, 1 <= i < j <= ell.
struct Root {
    int row;
    int col;
    bool operator==(const Root& o) const { return row == o.row && col == o.col; }
    bool operator<(const Root& o) const { return row != o.row ? row < o.row : col < o.col; }
};

// Upper order ideal of Delta_ell^+ under (a,b) <= (c,d) iff a >= c, b <= d;
// closed under moving up a row and right a column.  Stored as per-row start
// columns: row i holds exactly the roots (i, start_i .. ell); start_i = ell+1
// encodes an empty row.  Validity is the structural invariant
//   max(i+1, start_{i-1}) <= start_i <= ell+1.
class RootIdeal {
public:
    explicit RootIdeal(int ell);  // empty ideal
    static RootIdeal from_start_cols(int ell, std::vector<int> start);
    static RootIdeal full(int ell);
    // The ideal {(i,j) : k - v_i + i < j}; accepts any v with
    // v_i <= k and v_i + ell - i weakly decreasing (extended members).
    static RootIdeal delta_k(const Vec& v, int k);

    int ell() const { return ell_; }
    int start_col(int row) const;  // ell+1 when the row is empty
    bool has_row(int row) const { return start_col(row) <= ell_; }
    bool contains(int row, int col) const;
    bool contains(Root a) const { return contains(a.row, a.col); }
    int row_length(int row) const { return ell_ + 1 - start_col(row); }
    int col_length(int col) const;
    int size() const;
    int bottom() const;  // largest row with a root; 0 for the empty ideal

    std::vector<Root> roots() const;
    bool is_removable(Root a) const;
    bool is_addable(Root a) const;
    std::vector<Root> removable_roots() const;
    std::vector<Root> addable_roots() const;
    RootIdeal remove_root(Root a) const;  // throws if not removable
    RootIdeal add_root(Root a) const;     // throws if not addable

    std::optional<int> down(int x) const;  // column j with (x, j) removable
    std::optional<int> up(int x) const;    // row j with (j, x) removable

    // Bounce graph: edges (x, down(x)); a disjoint union of paths.
    std::vector<std::vector<int>> bounce_paths() const;
    int top(int x) const;
    int bot(int x) const;
    // Ordered vertex list from a to b; requires same path, a <= position of b.
    std::vector<int> path(int a, int b) const;
    int path_length(int a, int b) const { return static_cast<int>(path(a, b).size()); }
    std::vector<int> uppath(int x) const { return path(top(x), x); }
    // Lenient variant used by hypothesis checkers: empty when b is not
    // reachable from a by down-steps (including a "backwards" request).
    std::vector<int> path_segment(int a, int b) const;

    bool has_wall(int r) const;     // rows r, r+1 equal length
    bool has_ceiling(int c) const;  // columns c, c+1 equal length
    bool has_mirror(int r) const;   // removable (r,c), (r+1,c+1), c in [r+2, ell-1]

    IndexMultiset second_components() const;  // L(Psi)

    bool operator==(const RootIdeal& o) const { return ell_ == o.ell_ && start_ == o.start_; }
    bool operator!=(const RootIdeal& o) const { return !(*this == o); }
    bool operator<(const RootIdeal& o) const {
        return ell_ != o.ell_ ? ell_ < o.ell_ : start_ < o.start_;
    }

private:
    int ell_;
    std::vector<int> start_;  // start_[i-1] for row i

    void check_row(int row, const char* where) const;
};

IndexMultiset second_components(int ell, const std::vector<Root>& roots);

struct DeltaRelationRecord {
    RootIdeal lhs;  // Delta^{k+1}(v)
    RootIdeal rhs;  // Delta^k(v) minus its removable bottom-section roots
    bool equal;
};

// Corollary-2.11 consistency record; inequality is an internal_error surfaced
// to the caller, never silently ignored.
DeltaRelationRecord delta_k_plus_one_relation(const Vec& v, int k);

}  // namespace katalan
