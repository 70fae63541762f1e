#include "posetcalc/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace posetcalc {

namespace {
constexpr int kMaxCarrier = 1 << 20;
constexpr int kNoJdim = std::numeric_limits<int>::max() / 2;
} // namespace

FiniteLattice FiniteLattice::grid(std::vector<int> sizes) {
    FiniteLattice L;
    L.kind_ = LatticeKind::Grid;
    if (sizes.empty()) throw std::invalid_argument("grid needs at least one axis");
    long long total = 1;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("grid axis size must be positive");
        total *= s;
        if (total > kMaxCarrier) throw std::invalid_argument("grid carrier too large");
    }
    L.grid_sizes_ = std::move(sizes);
    L.grid_strides_.assign(L.grid_sizes_.size(), 1);
    for (int i = static_cast<int>(L.grid_sizes_.size()) - 2; i >= 0; --i)
        L.grid_strides_[i] = L.grid_strides_[i + 1] * L.grid_sizes_[i + 1];
    L.size_ = static_cast<int>(total);
    L.bottom_ = 0;
    L.finalize();
    return L;
}

FiniteLattice FiniteLattice::power_set(std::vector<std::string> universe) {
    FiniteLattice L;
    L.kind_ = LatticeKind::PowerSet;
    if (universe.size() > 20) throw std::invalid_argument("power set universe too large");
    for (size_t i = 0; i < universe.size(); ++i)
        for (size_t j = i + 1; j < universe.size(); ++j)
            if (universe[i] == universe[j])
                throw std::invalid_argument("duplicate vertex name '" + universe[i] + "'");
    L.universe_ = std::move(universe);
    L.size_ = 1 << L.universe_.size();
    L.bottom_ = 0;
    L.finalize();
    return L;
}

FiniteLattice FiniteLattice::explicit_lattice(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& covers) {
    FiniteLattice L;
    L.kind_ = LatticeKind::Explicit;
    int n = static_cast<int>(names.size());
    if (n == 0) throw std::invalid_argument("explicit lattice needs elements");
    if (n > 4096) throw std::invalid_argument("explicit carrier too large");
    std::map<std::string, Elem> index;
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(names[i], i).second)
            throw std::invalid_argument("duplicate element name '" + names[i] + "'");
    }
    L.names_ = std::move(names);
    L.size_ = n;

    L.leq_.assign(static_cast<size_t>(n) * n, 0);
    auto rel = [&](Elem a, Elem b) -> uint8_t& { return L.leq_[static_cast<size_t>(a) * n + b]; };
    for (int i = 0; i < n; ++i) rel(i, i) = 1;
    for (const auto& [lo, hi] : covers) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end() || b == index.end())
            throw std::invalid_argument("covering pair references unknown element");
        if (a->second == b->second)
            throw std::invalid_argument("covering pair '" + lo + " < " + hi + "' is reflexive");
        rel(a->second, b->second) = 1;
    }
    // reflexive-transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (rel(i, k))
                for (int j = 0; j < n; ++j)
                    if (rel(k, j)) rel(i, j) = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel(i, j) && rel(j, i))
                throw std::invalid_argument("order contains a cycle through '" + L.names_[i] + "'");

    // joins and meets must exist for every pair
    L.join_table_.assign(static_cast<size_t>(n) * n, -1);
    L.meet_table_.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            Elem lub = -1, glb = -1;
            for (int u = 0; u < n; ++u) {
                if (rel(a, u) && rel(b, u)) {
                    bool least = true;
                    for (int w = 0; w < n && least; ++w)
                        if (rel(a, w) && rel(b, w) && !rel(u, w)) least = false;
                    if (least) { lub = u; break; }
                }
            }
            for (int u = 0; u < n; ++u) {
                if (rel(u, a) && rel(u, b)) {
                    bool greatest = true;
                    for (int w = 0; w < n && greatest; ++w)
                        if (rel(w, a) && rel(w, b) && !rel(w, u)) greatest = false;
                    if (greatest) { glb = u; break; }
                }
            }
            if (lub < 0)
                throw std::invalid_argument("join of '" + L.names_[a] + "' and '" + L.names_[b] +
                                            "' does not exist");
            if (glb < 0)
                throw std::invalid_argument("meet of '" + L.names_[a] + "' and '" + L.names_[b] +
                                            "' does not exist");
            L.join_table_[static_cast<size_t>(a) * n + b] = L.join_table_[static_cast<size_t>(b) * n + a] = lub;
            L.meet_table_[static_cast<size_t>(a) * n + b] = L.meet_table_[static_cast<size_t>(b) * n + a] = glb;
        }
    }

    Elem bot = -1;
    for (int u = 0; u < n && bot < 0; ++u) {
        bool below_all = true;
        for (int w = 0; w < n && below_all; ++w)
            if (!rel(u, w)) below_all = false;
        if (below_all) bot = u;
    }
    if (bot < 0) throw std::invalid_argument("lattice has no least element");
    L.bottom_ = bot;
    L.finalize();
    return L;
}

bool FiniteLattice::leq(Elem a, Elem b) const {
    switch (kind_) {
    case LatticeKind::Grid: {
        for (size_t i = 0; i < grid_sizes_.size(); ++i) {
            int ca = (a / grid_strides_[i]) % grid_sizes_[i];
            int cb = (b / grid_strides_[i]) % grid_sizes_[i];
            if (ca > cb) return false;
        }
        return true;
    }
    case LatticeKind::PowerSet:
        return (static_cast<uint64_t>(a) & ~static_cast<uint64_t>(b)) == 0;
    case LatticeKind::Explicit:
        return leq_[static_cast<size_t>(a) * size_ + b] != 0;
    }
    return false;
}

Elem FiniteLattice::join(Elem a, Elem b) const {
    switch (kind_) {
    case LatticeKind::Grid: {
        Elem r = 0;
        for (size_t i = 0; i < grid_sizes_.size(); ++i) {
            int ca = (a / grid_strides_[i]) % grid_sizes_[i];
            int cb = (b / grid_strides_[i]) % grid_sizes_[i];
            r += std::max(ca, cb) * grid_strides_[i];
        }
        return r;
    }
    case LatticeKind::PowerSet:
        return a | b;
    case LatticeKind::Explicit:
        return join_table_[static_cast<size_t>(a) * size_ + b];
    }
    return -1;
}

Elem FiniteLattice::meet(Elem a, Elem b) const {
    switch (kind_) {
    case LatticeKind::Grid: {
        Elem r = 0;
        for (size_t i = 0; i < grid_sizes_.size(); ++i) {
            int ca = (a / grid_strides_[i]) % grid_sizes_[i];
            int cb = (b / grid_strides_[i]) % grid_sizes_[i];
            r += std::min(ca, cb) * grid_strides_[i];
        }
        return r;
    }
    case LatticeKind::PowerSet:
        return a & b;
    case LatticeKind::Explicit:
        return meet_table_[static_cast<size_t>(a) * size_ + b];
    }
    return -1;
}

void FiniteLattice::finalize() {
    const int n = size_;
    up_.assign(n, {});
    down_.assign(n, {});
    switch (kind_) {
    case LatticeKind::Grid:
        for (Elem a = 0; a < n; ++a)
            for (size_t i = 0; i < grid_sizes_.size(); ++i) {
                int c = (a / grid_strides_[i]) % grid_sizes_[i];
                if (c + 1 < grid_sizes_[i]) {
                    Elem b = a + grid_strides_[i];
                    cover_pairs_.emplace_back(a, b);
                    up_[a].push_back(b);
                    down_[b].push_back(a);
                }
            }
        break;
    case LatticeKind::PowerSet:
        for (Elem a = 0; a < n; ++a)
            for (size_t i = 0; i < universe_.size(); ++i)
                if (!(a & (1 << i))) {
                    Elem b = a | (1 << i);
                    cover_pairs_.emplace_back(a, b);
                    up_[a].push_back(b);
                    down_[b].push_back(a);
                }
        break;
    case LatticeKind::Explicit:
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                if (a == b || !leq(a, b)) continue;
                bool covering = true;
                for (Elem w = 0; w < n && covering; ++w)
                    if (w != a && w != b && leq(a, w) && leq(w, b)) covering = false;
                if (covering) {
                    cover_pairs_.emplace_back(a, b);
                    up_[a].push_back(b);
                    down_[b].push_back(a);
                }
            }
        break;
    }
    std::sort(cover_pairs_.begin(), cover_pairs_.end());

    // An element is join-irreducible exactly when it has a single lower cover.
    join_irr_.assign(n, 0);
    for (Elem a = 0; a < n; ++a)
        if (a != bottom_ && down_[a].size() == 1) {
            join_irr_[a] = 1;
            join_irreducibles_.push_back(a);
        }

    if (kind_ == LatticeKind::Explicit) {
        distributive_ = true;
        for (Elem x = 0; x < n && distributive_; ++x)
            for (Elem y = 0; y < n && distributive_; ++y)
                for (Elem z = 0; z < n; ++z) {
                    if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
                        distributive_ = false;
                        dist_witness_ = std::array<Elem, 3>{x, y, z};
                        break;
                    }
                }
    } else {
        distributive_ = true;  // products of chains
    }

    jdim_.assign(n, kNoJdim);
    max_jdim_ = 0;
    if (distributive_) {
        for (Elem v = 0; v < n; ++v) {
            if (v == bottom_) {
                jdim_[v] = 0;
                continue;
            }
            int count = 0;
            for (Elem j : join_irreducibles_) {
                if (!leq(j, v)) continue;
                bool maximal = true;
                for (Elem j2 : join_irreducibles_)
                    if (j2 != j && leq(j, j2) && leq(j2, v)) { maximal = false; break; }
                if (maximal) ++count;
            }
            jdim_[v] = count;
            max_jdim_ = std::max(max_jdim_, count);
        }
    } else {
        jdim_[bottom_] = 0;
        for (Elem j : join_irreducibles_) jdim_[j] = 1;
    }

    canonical_order_.resize(n);
    std::iota(canonical_order_.begin(), canonical_order_.end(), 0);
    std::sort(canonical_order_.begin(), canonical_order_.end(), [&](Elem a, Elem b) {
        int la = jdim_[a] == kNoJdim ? 2 : jdim_[a];
        int lb = jdim_[b] == kNoJdim ? 2 : jdim_[b];
        if (la != lb) return la < lb;
        return repr_key(a) < repr_key(b);
    });
    canonical_rank_.assign(n, 0);
    for (int i = 0; i < n; ++i) canonical_rank_[canonical_order_[i]] = i;
}

int FiniteLattice::jdim(Elem v) const {
    if (!distributive_)
        throw std::domain_error("join-dimension requires a distributive lattice");
    return jdim_[v];
}

int FiniteLattice::max_jdim() const {
    if (!distributive_)
        throw std::domain_error("join-dimension requires a distributive lattice");
    return max_jdim_;
}

int FiniteLattice::jdim_level(Elem v) const { return jdim_[v]; }

std::vector<Elem> FiniteLattice::below_with_jdim_at_most(Elem x, int k) const {
    if (!distributive_ && k >= 2)
        throw std::domain_error("jdim levels above 1 require a distributive lattice");
    std::vector<Elem> out;
    for (Elem v : canonical_order_)
        if (jdim_[v] <= k && leq(v, x)) out.push_back(v);
    return out;
}

std::vector<int> FiniteLattice::coords(Elem a) const {
    std::vector<int> c(grid_sizes_.size());
    for (size_t i = 0; i < grid_sizes_.size(); ++i)
        c[i] = (a / grid_strides_[i]) % grid_sizes_[i];
    return c;
}

Elem FiniteLattice::at_coords(const std::vector<int>& c) const {
    if (c.size() != grid_sizes_.size()) throw std::invalid_argument("coordinate arity mismatch");
    Elem a = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= grid_sizes_[i]) throw std::invalid_argument("coordinate out of range");
        a += c[i] * grid_strides_[i];
    }
    return a;
}

std::uint64_t FiniteLattice::mask(Elem a) const { return static_cast<uint64_t>(a); }

Elem FiniteLattice::at_mask(std::uint64_t m) const {
    if (m >= static_cast<uint64_t>(size_)) throw std::invalid_argument("mask out of range");
    return static_cast<Elem>(m);
}

std::string FiniteLattice::name(Elem a) const {
    switch (kind_) {
    case LatticeKind::Grid: {
        std::ostringstream os;
        os << '(';
        auto c = coords(a);
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        os << ')';
        return os.str();
    }
    case LatticeKind::PowerSet: {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (size_t i = 0; i < universe_.size(); ++i)
            if (a & (1 << i)) {
                if (!first) os << ',';
                os << universe_[i];
                first = false;
            }
        os << '}';
        return os.str();
    }
    case LatticeKind::Explicit:
        return names_[a];
    }
    return {};
}

std::optional<Elem> FiniteLattice::find(const std::string& s) const {
    switch (kind_) {
    case LatticeKind::Grid: {
        if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
        std::vector<int> c;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                c.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        if (c.size() != grid_sizes_.size()) return std::nullopt;
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] < 0 || c[i] >= grid_sizes_[i]) return std::nullopt;
        return at_coords(c);
    }
    case LatticeKind::PowerSet: {
        if (s.size() < 2 || s.front() != '{' || s.back() != '}') return std::nullopt;
        std::string body = s.substr(1, s.size() - 2);
        uint64_t m = 0;
        if (!body.empty()) {
            std::istringstream is(body);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                auto it = std::find(universe_.begin(), universe_.end(), tok);
                if (it == universe_.end()) return std::nullopt;
                m |= 1ull << (it - universe_.begin());
            }
        }
        return at_mask(m);
    }
    case LatticeKind::Explicit: {
        auto it = std::find(names_.begin(), names_.end(), s);
        if (it == names_.end()) return std::nullopt;
        return static_cast<Elem>(it - names_.begin());
    }
    }
    return std::nullopt;
}

std::vector<int> FiniteLattice::repr_key(Elem a) const {
    switch (kind_) {
    case LatticeKind::Grid:
        return coords(a);
    case LatticeKind::PowerSet: {
        std::vector<int> k;
        for (size_t i = 0; i < universe_.size(); ++i)
            if (a & (1 << i)) k.push_back(static_cast<int>(i));
        return k;
    }
    case LatticeKind::Explicit:
        return {a};
    }
    return {};
}

LatticePtr make_grid(std::vector<int> sizes) {
    return std::make_shared<FiniteLattice>(FiniteLattice::grid(std::move(sizes)));
}

LatticePtr make_power_set(std::vector<std::string> universe) {
    return std::make_shared<FiniteLattice>(FiniteLattice::power_set(std::move(universe)));
}

LatticePtr make_explicit(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    return std::make_shared<FiniteLattice>(FiniteLattice::explicit_lattice(std::move(names), covers));
}

LatticePtr make_m3() {
    return make_explicit({"a0", "a1", "a2", "a3", "a4"},
                         {{"a0", "a1"}, {"a0", "a2"}, {"a0", "a3"},
                          {"a1", "a4"}, {"a2", "a4"}, {"a3", "a4"}});
}

LatticePtr make_n5() {
    return make_explicit({"b0", "b1", "b2", "b3", "b4"},
                         {{"b0", "b1"}, {"b1", "b3"}, {"b3", "b4"},
                          {"b0", "b2"}, {"b2", "b4"}});
}

std::optional<std::array<Elem, 5>> find_m3_sublattice(const FiniteLattice& L) {
    const int n = L.size();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b) {
            if (L.leq(a, b) || L.leq(b, a)) continue;
            Elem t = L.join(a, b), z = L.meet(a, b);
            for (Elem c = b + 1; c < n; ++c) {
                if (L.leq(a, c) || L.leq(c, a) || L.leq(b, c) || L.leq(c, b)) continue;
                if (L.join(a, c) == t && L.join(b, c) == t && L.meet(a, c) == z &&
                    L.meet(b, c) == z)
                    return std::array<Elem, 5>{z, a, b, c, t};
            }
        }
    return std::nullopt;
}

std::optional<std::array<Elem, 5>> find_n5_sublattice(const FiniteLattice& L) {
    const int n = L.size();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (a == b || !L.lt(a, b)) continue;
            for (Elem c = 0; c < n; ++c) {
                if (L.leq(c, a) || L.leq(a, c) || L.leq(c, b) || L.leq(b, c)) continue;
                Elem t = L.join(a, c), z = L.meet(a, c);
                if (L.join(b, c) == t && L.meet(b, c) == z)
                    return std::array<Elem, 5>{z, a, b, c, t};
            }
        }
    return std::nullopt;
}

} // namespace posetcalc
