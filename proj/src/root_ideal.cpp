#include "katalan/root_ideal.hpp"

#include <algorithm>

namespace katalan {

RootIdeal::RootIdeal(int ell) : ell_(ell) {
    if (ell < 1) throw std::invalid_argument("RootIdeal: length must be positive");
    start_.assign(ell, ell + 1);
}

RootIdeal RootIdeal::from_start_cols(int ell, std::vector<int> start) {
    RootIdeal psi(ell);
    if (static_cast<int>(start.size()) != ell)
        throw std::invalid_argument("RootIdeal::from_start_cols: wrong number of rows");
    for (int i = 1; i <= ell; ++i) {
        int s = start[i - 1];
        if (s > ell) s = ell + 1;  // normalize any "absent" encoding
        int lo = std::max(i + 1, i >= 2 ? start[i - 2] : 0);
        if (s < lo)
            throw std::invalid_argument("RootIdeal::from_start_cols: start column " + std::to_string(s) +
                                        " in row " + std::to_string(i) + " violates the ideal invariant");
        start[i - 1] = s;
    }
    psi.start_ = std::move(start);
    return psi;
}

RootIdeal RootIdeal::full(int ell) {
    RootIdeal psi(ell);
    for (int i = 1; i <= ell; ++i) psi.start_[i - 1] = std::min(i + 1, ell + 1);
    return psi;
}

RootIdeal RootIdeal::delta_k(const Vec& v, int k) {
    const int ell = static_cast<int>(v.size());
    if (!is_extended_member(v, k))
        throw std::domain_error("delta_k: vector " + vec_to_string(v) + " is not an extended member for k=" +
                                std::to_string(k));
    RootIdeal psi(ell);
    for (int i = 1; i <= ell; ++i) {
        long long s = static_cast<long long>(k) - v[i - 1] + i + 1;
        psi.start_[i - 1] = s <= ell ? static_cast<int>(s) : ell + 1;
    }
    return psi;
}

void RootIdeal::check_row(int row, const char* where) const {
    if (row < 1 || row > ell_)
        throw std::invalid_argument(std::string(where) + ": row " + std::to_string(row) + " outside [1," +
                                    std::to_string(ell_) + "]");
}

int RootIdeal::start_col(int row) const {
    check_row(row, "RootIdeal::start_col");
    return start_[row - 1];
}

bool RootIdeal::contains(int row, int col) const {
    if (row < 1 || row > ell_ || col < 1 || col > ell_) return false;
    return col >= start_[row - 1];
}

int RootIdeal::col_length(int col) const {
    if (col < 1 || col > ell_)
        throw std::invalid_argument("RootIdeal::col_length: column outside [1,ell]");
    int n = 0;
    for (int i = 1; i < col; ++i)
        if (start_[i - 1] <= col) ++n;
    return n;
}

int RootIdeal::size() const {
    int n = 0;
    for (int i = 1; i <= ell_; ++i) n += row_length(i);
    return n;
}

int RootIdeal::bottom() const {
    for (int i = ell_; i >= 1; --i)
        if (start_[i - 1] <= ell_) return i;
    return 0;
}

std::vector<Root> RootIdeal::roots() const {
    std::vector<Root> out;
    for (int i = 1; i <= ell_; ++i)
        for (int j = start_[i - 1]; j <= ell_; ++j) out.push_back({i, j});
    return out;
}

bool RootIdeal::is_removable(Root a) const {
    if (!contains(a)) return false;
    if (a.col != start_[a.row - 1]) return false;           // (row, col-1) must be outside
    if (a.row < ell_ && start_[a.row] <= a.col) return false;  // (row+1, col) must be outside
    return true;
}

bool RootIdeal::is_addable(Root a) const {
    if (a.row < 1 || a.col > ell_ || a.row >= a.col) return false;
    if (contains(a)) return false;
    if (a.col + 1 != start_[a.row - 1]) return false;        // (row, col+1) must be inside (or col = ell)
    if (a.row > 1 && start_[a.row - 2] > a.col) return false;  // (row-1, col) must be inside
    return true;
}

std::vector<Root> RootIdeal::removable_roots() const {
    std::vector<Root> out;
    for (int i = 1; i <= ell_; ++i) {
        Root a{i, start_[i - 1]};
        if (a.col <= ell_ && is_removable(a)) out.push_back(a);
    }
    return out;
}

std::vector<Root> RootIdeal::addable_roots() const {
    std::vector<Root> out;
    for (int i = 1; i <= ell_; ++i) {
        Root a{i, start_[i - 1] - 1};
        if (is_addable(a)) out.push_back(a);
    }
    return out;
}

RootIdeal RootIdeal::remove_root(Root a) const {
    if (!is_removable(a))
        throw std::invalid_argument("RootIdeal::remove_root: (" + std::to_string(a.row) + "," +
                                    std::to_string(a.col) + ") is not removable");
    RootIdeal psi = *this;
    psi.start_[a.row - 1] = a.col + 1 > ell_ ? ell_ + 1 : a.col + 1;
    return psi;
}

RootIdeal RootIdeal::add_root(Root a) const {
    if (!is_addable(a))
        throw std::invalid_argument("RootIdeal::add_root: (" + std::to_string(a.row) + "," +
                                    std::to_string(a.col) + ") is not addable");
    RootIdeal psi = *this;
    psi.start_[a.row - 1] = a.col;
    return psi;
}

std::optional<int> RootIdeal::down(int x) const {
    check_row(x, "RootIdeal::down");
    Root a{x, start_[x - 1]};
    if (a.col <= ell_ && is_removable(a)) return a.col;
    return std::nullopt;
}

std::optional<int> RootIdeal::up(int x) const {
    check_row(x, "RootIdeal::up");
    for (int r = x - 1; r >= 1; --r) {
        if (start_[r - 1] == x) {
            if (is_removable({r, x})) return r;
        } else if (start_[r - 1] < x) {
            break;  // start columns only decrease upward; no later row can start at x
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> RootIdeal::bounce_paths() const {
    std::vector<char> is_target(ell_ + 1, 0);
    std::vector<int> next(ell_ + 1, 0);
    for (int x = 1; x <= ell_; ++x) {
        if (auto j = down(x)) {
            next[x] = *j;
            is_target[*j] = 1;
        }
    }
    std::vector<std::vector<int>> paths;
    for (int x = 1; x <= ell_; ++x) {
        if (is_target[x]) continue;  // not a path start
        std::vector<int> p;
        for (int v = x; v != 0; v = next[v]) p.push_back(v);
        paths.push_back(std::move(p));
    }
    return paths;
}

int RootIdeal::top(int x) const {
    check_row(x, "RootIdeal::top");
    int t = x;
    while (auto r = up(t)) t = *r;
    return t;
}

int RootIdeal::bot(int x) const {
    check_row(x, "RootIdeal::bot");
    int b = x;
    while (auto j = down(b)) b = *j;
    return b;
}

std::vector<int> RootIdeal::path_segment(int a, int b) const {
    check_row(a, "RootIdeal::path_segment");
    if (b < 1 || b > ell_) return {};
    std::vector<int> p;
    int v = a;
    while (true) {
        p.push_back(v);
        if (v == b) return p;
        auto j = down(v);
        if (!j) return {};
        v = *j;
    }
}

std::vector<int> RootIdeal::path(int a, int b) const {
    check_row(a, "RootIdeal::path");
    check_row(b, "RootIdeal::path");
    auto p = path_segment(a, b);
    if (p.empty())
        throw std::invalid_argument("RootIdeal::path: " + std::to_string(b) + " is not reachable from " +
                                    std::to_string(a) + " in the bounce graph");
    return p;
}

bool RootIdeal::has_wall(int r) const {
    if (r < 1 || r + 1 > ell_)
        throw std::invalid_argument("RootIdeal::has_wall: row pair outside range");
    return row_length(r) == row_length(r + 1);
}

bool RootIdeal::has_ceiling(int c) const {
    if (c < 1 || c + 1 > ell_)
        throw std::invalid_argument("RootIdeal::has_ceiling: column pair outside range");
    return col_length(c) == col_length(c + 1);
}

bool RootIdeal::has_mirror(int r) const {
    if (r < 1 || r + 1 > ell_)
        throw std::invalid_argument("RootIdeal::has_mirror: row pair outside range");
    // c ranges over every column that can host the pair; the c = r+1 case is
    // required for the wall/mirror/ceiling trichotomy on maximal-entry rows
    for (int c = r + 1; c <= ell_ - 1; ++c)
        if (is_removable({r, c}) && is_removable({r + 1, c + 1})) return true;
    return false;
}

IndexMultiset RootIdeal::second_components() const {
    IndexMultiset m(ell_);
    for (int i = 1; i <= ell_; ++i)
        for (int j = start_[i - 1]; j <= ell_; ++j) m.add(j);
    return m;
}

IndexMultiset second_components(int ell, const std::vector<Root>& roots) {
    IndexMultiset m(ell);
    for (const Root& a : roots) m.add(a.col);
    return m;
}

DeltaRelationRecord delta_k_plus_one_relation(const Vec& v, int k) {
    RootIdeal dk = RootIdeal::delta_k(v, k);
    RootIdeal dk1 = RootIdeal::delta_k(v, k + 1);
    RootIdeal rhs = dk;
    const int b = dk.bottom();
    for (int z = 1; z <= b; ++z) {
        auto j = rhs.down(z);
        if (!j)
            throw internal_error("delta_k_plus_one_relation: row " + std::to_string(z) +
                                 " of the bottom section has no removable root");
        rhs = rhs.remove_root({z, *j});
    }
    DeltaRelationRecord rec{dk1, rhs, dk1 == rhs};
    if (!rec.equal)
        throw internal_error("delta_k_plus_one_relation: identity failed for v=" + vec_to_string(v) +
                             ", k=" + std::to_string(k));
    return rec;
}

}  // namespace katalan
