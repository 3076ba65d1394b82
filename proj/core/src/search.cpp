#include "finsum/search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <set>
#include <thread>

namespace finsum {

// ---------------------------------------------------------------------------
// GroundSet

GroundSet GroundSet::from_values(std::vector<BigInt> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) throw Error("malformed-input", "ground set must be nonempty");
    GroundSet g;
    g.kind_ = Kind::Values;
    g.values_ = std::move(values);
    return g;
}

GroundSet GroundSet::interval(const BigInt& lo, const BigInt& hi) {
    if (lo > hi) throw Error("malformed-input", "empty interval");
    BigInt span = hi - lo + 1;
    if (span > BigInt(1) << 22) throw Error("cap-exceeded", "interval exceeds the ground-set cap");
    std::vector<BigInt> values;
    values.reserve(span.get_ui());
    for (BigInt v = lo; v <= hi; ++v) values.push_back(v);
    return from_values(std::move(values));
}

GroundSet GroundSet::from_fs(const FsSpec& spec, const EnumLimits& limits) {
    GroundSet g = from_values(fs_enumerate(spec, limits));
    g.fs_origin_ = spec;
    return g;
}

GroundSet GroundSet::cube(int t, int n) {
    if (t < 2) throw Error("malformed-input", "cube alphabet needs t >= 2");
    if (n < 1) throw Error("malformed-input", "cube needs n >= 1");
    double size = 1;
    for (int i = 0; i < n; ++i) {
        size *= t;
        if (size > double(1 << 22)) throw Error("cap-exceeded", "cube exceeds the ground-set cap");
    }
    GroundSet g;
    g.kind_ = Kind::Cube;
    g.cube_t_ = t;
    g.cube_n_ = n;
    return g;
}

std::size_t GroundSet::size() const {
    if (kind_ == Kind::Values) return values_.size();
    std::size_t s = 1;
    for (int i = 0; i < cube_n_; ++i) s *= static_cast<std::size_t>(cube_t_);
    return s;
}

bool GroundSet::has_value(const BigInt& v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

int GroundSet::index_of(const BigInt& v) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) return -1;
    return static_cast<int>(it - values_.begin());
}

std::vector<int> GroundSet::cube_word(std::size_t index) const {
    std::vector<int> word(static_cast<std::size_t>(cube_n_));
    for (int i = cube_n_ - 1; i >= 0; --i) {
        word[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(cube_t_));
        index /= static_cast<std::size_t>(cube_t_);
    }
    return word;
}

std::size_t GroundSet::cube_index(std::span<const int> word) const {
    std::size_t index = 0;
    for (int digit : word) index = index * static_cast<std::size_t>(cube_t_) + static_cast<std::size_t>(digit);
    return index;
}

// ---------------------------------------------------------------------------
// Target / Coloring

Target Target::ap(int len) {
    if (len < 2) throw Error("malformed-input", "progression length must be >= 2");
    Target t;
    t.kind = Kind::Ap;
    t.length = len;
    return t;
}

Target Target::brauer(int len, const BigInt& s) {
    if (len < 1) throw Error("malformed-input", "progression length must be >= 1");
    if (s < 1) throw Error("malformed-input", "s must be positive");
    Target t;
    t.kind = Kind::Brauer;
    t.length = len;
    t.brauer_s = s;
    return t;
}

Target Target::line() {
    Target t;
    t.kind = Kind::Line;
    return t;
}

Target Target::subspace(int dim) {
    if (dim < 1) throw Error("malformed-input", "subspace dimension must be >= 1");
    Target t;
    t.kind = Kind::Subspace;
    t.dim = dim;
    return t;
}

Target Target::equation(LinearSystem sys, bool distinct) {
    validate_system(sys);
    Target t;
    t.kind = Kind::Equation;
    t.system = std::move(sys);
    t.distinct = distinct;
    return t;
}

Target Target::shifted_fs(int k, int t) {
    if (k < 2 || t < 1) throw Error("malformed-input", "shifted-fs needs k >= 2 and t >= 1");
    Target target;
    target.kind = Kind::ShiftedFs;
    target.fs_k = k;
    target.fs_t = t;
    return target;
}

Coloring canonicalize_colors(const Coloring& c) {
    Coloring out;
    out.r = c.r;
    out.colors.reserve(c.colors.size());
    std::vector<int> relabel(static_cast<std::size_t>(c.r), -1);
    int used = 0;
    for (int color : c.colors) {
        if (color < 0 || color >= c.r) throw Error("malformed-input", "color out of range");
        auto& slot = relabel[static_cast<std::size_t>(color)];
        if (slot < 0) slot = used++;
        out.colors.push_back(slot);
    }
    return out;
}

namespace {

void check_coloring(const GroundSet& ground, const Coloring& coloring) {
    if (coloring.colors.size() != ground.size())
        throw Error("malformed-input", "coloring must assign a color to every element");
    for (int c : coloring.colors)
        if (c < 0 || c >= coloring.r) throw Error("malformed-input", "color out of range");
}

// ---------------------------------------------------------------------------
// find_mono: straight-line per-target scans. This path stays independent of
// the universal-search bookkeeping below so counterexamples get checked by
// genuinely different code.

std::optional<MonoWitness> mono_ap(const GroundSet& g, const Coloring& col, int len) {
    const auto& v = g.values();
    const std::size_t m = v.size();
    const BigInt& vmax = v.back();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (col.colors[j] != col.colors[i]) continue;
            BigInt d = v[j] - v[i];
            if (v[i] + (len - 1) * d > vmax) break;
            bool ok = true;
            BigInt term = v[j];
            for (int q = 2; q < len && ok; ++q) {
                term += d;
                int idx = g.index_of(term);
                ok = idx >= 0 && col.colors[static_cast<std::size_t>(idx)] == col.colors[i];
            }
            if (!ok) continue;
            MonoWitness w;
            w.kind = "ap";
            w.color = col.colors[i];
            w.ap = ArithProgression{v[i], d, len};
            w.elements = w.ap->terms();
            return w;
        }
    }
    return std::nullopt;
}

std::optional<MonoWitness> mono_brauer(const GroundSet& g, const Coloring& col, int len,
                                       const BigInt& s) {
    const auto& v = g.values();
    const std::size_t m = v.size();
    const BigInt& vmax = v.back();
    auto element_ok = [&](const BigInt& value, int color) {
        int idx = g.index_of(value);
        return idx >= 0 && col.colors[static_cast<std::size_t>(idx)] == color;
    };
    if (len == 1) {
        // degenerate progression {a} plus the element s*d; candidate s*d
        // values are the ground multiples of s
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t u = 0; u < m; ++u) {
                if (v[u] < s || v[u] % s != 0) continue;
                if (col.colors[u] != col.colors[i]) continue;
                MonoWitness w;
                w.kind = "brauer";
                w.color = col.colors[i];
                w.ap = ArithProgression{v[i], v[u] / s, 1};
                w.brauer_sd = v[u];
                w.elements = {v[i], v[u]};
                std::sort(w.elements.begin(), w.elements.end());
                w.elements.erase(std::unique(w.elements.begin(), w.elements.end()),
                                 w.elements.end());
                return w;
            }
        }
        return std::nullopt;
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (col.colors[j] != col.colors[i]) continue;
            BigInt d = v[j] - v[i];
            if (v[i] + (len - 1) * d > vmax) break;
            bool ok = element_ok(s * d, col.colors[i]);
            BigInt term = v[j];
            for (int q = 2; q < len && ok; ++q) {
                term += d;
                ok = element_ok(term, col.colors[i]);
            }
            if (!ok) continue;
            MonoWitness w;
            w.kind = "brauer";
            w.color = col.colors[i];
            w.ap = ArithProgression{v[i], d, len};
            w.brauer_sd = s * d;
            w.elements = w.ap->terms();
            w.elements.push_back(s * d);
            std::sort(w.elements.begin(), w.elements.end());
            w.elements.erase(std::unique(w.elements.begin(), w.elements.end()), w.elements.end());
            return w;
        }
    }
    return std::nullopt;
}

// Solves the last variable from the first row with a nonzero trailing
// coefficient, then checks the full system.
std::optional<MonoWitness> mono_equation(const GroundSet& g, const Coloring& col,
                                         const LinearSystem& sys, bool distinct) {
    const auto& v = g.values();
    const int n = sys.cols;
    int pivot_row = -1;
    for (int row = 0; row < sys.rows && pivot_row < 0; ++row)
        if (sys.at(row, n - 1) != 0) pivot_row = row;
    // columns are nonzero, so pivot_row >= 0

    std::vector<BigInt> x(static_cast<std::size_t>(n));
    std::optional<MonoWitness> found;
    std::function<bool(int, int)> walk = [&](int var, int color) -> bool {
        if (var == n - 1) {
            BigInt acc = 0;
            for (int i = 0; i < n - 1; ++i)
                acc += sys.at(pivot_row, i) * x[static_cast<std::size_t>(i)];
            const BigInt& an = sys.at(pivot_row, n - 1);
            if (acc % an != 0) return false;
            BigInt last = -acc / an;
            int idx = g.index_of(last);
            if (idx < 0) return false;
            if (color >= 0 && col.colors[static_cast<std::size_t>(idx)] != color) return false;
            x[static_cast<std::size_t>(n - 1)] = last;
            if (distinct)
                for (int i = 0; i < n - 1; ++i)
                    if (x[static_cast<std::size_t>(i)] == last) return false;
            for (int row = 0; row < sys.rows; ++row) {
                BigInt check = 0;
                for (int i = 0; i < n; ++i)
                    check += sys.at(row, i) * x[static_cast<std::size_t>(i)];
                if (check != 0) return false;
            }
            MonoWitness w;
            w.kind = "equation";
            w.color = color >= 0 ? color : col.colors[static_cast<std::size_t>(idx)];
            w.solution = x;
            w.elements = x;
            std::sort(w.elements.begin(), w.elements.end());
            w.elements.erase(std::unique(w.elements.begin(), w.elements.end()), w.elements.end());
            found = std::move(w);
            return true;
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (color >= 0 && col.colors[i] != color) continue;
            if (distinct) {
                bool dup = false;
                for (int q = 0; q < var && !dup; ++q)
                    dup = x[static_cast<std::size_t>(q)] == v[i];
                if (dup) continue;
            }
            x[static_cast<std::size_t>(var)] = v[i];
            int next_color = color >= 0 ? color : col.colors[i];
            if (walk(var + 1, next_color)) return true;
        }
        return false;
    };
    walk(0, -1);
    return found;
}

// Canonical parametric-word order: at each cell try a fresh variable first,
// then digits ascending, then already-introduced variables. For dim = 1 on
// the square this visits (*,0), (*,1), (*,*), (0,*), (1,*).
std::optional<MonoWitness> mono_words(const GroundSet& g, const Coloring& col, int dim,
                                      const char* kind) {
    const int t = g.cube_t();
    const int n = g.cube_n();
    if (dim > n) return std::nullopt;
    std::vector<int> cells(static_cast<std::size_t>(n), 0);
    std::optional<MonoWitness> found;

    auto try_word = [&]() -> bool {
        std::vector<int> vals(static_cast<std::size_t>(dim), 0);
        std::vector<std::vector<int>> points;
        int color = -1;
        while (true) {
            std::vector<int> point(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                int cell = cells[static_cast<std::size_t>(i)];
                point[static_cast<std::size_t>(i)] =
                    cell >= 0 ? cell : vals[static_cast<std::size_t>(-cell - 1)];
            }
            int c = col.colors[g.cube_index(point)];
            if (color < 0)
                color = c;
            else if (c != color)
                return false;
            points.push_back(std::move(point));
            int pos = dim - 1;
            while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == t - 1) {
                vals[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++vals[static_cast<std::size_t>(pos)];
        }
        MonoWitness w;
        w.kind = kind;
        w.color = color;
        w.cube_words = std::move(points);
        ParametricWord word;
        word.cells = cells;
        word.k = t;
        word.dim = dim;
        w.word = std::move(word);
        found = std::move(w);
        return true;
    };

    std::function<bool(int, int)> walk = [&](int pos, int used) -> bool {
        if (pos == n) return used == dim && try_word();
        if (used < dim) {
            cells[static_cast<std::size_t>(pos)] = -(used + 1);
            if (walk(pos + 1, used + 1)) return true;
        }
        for (int digit = 0; digit < t; ++digit) {
            cells[static_cast<std::size_t>(pos)] = digit;
            if (walk(pos + 1, used)) return true;
        }
        for (int var = 1; var <= used; ++var) {
            cells[static_cast<std::size_t>(pos)] = -var;
            if (walk(pos + 1, used)) return true;
        }
        return false;
    };
    walk(0, 0);
    return found;
}

}  // namespace

std::optional<ShiftedFsWitness> find_shifted_fs(const FsSpec& spec, const Coloring& coloring,
                                                int t, const EnumLimits& limits) {
    validate_spec(spec);
    if (t < 1) throw Error("malformed-input", "t must be >= 1");
    GroundSet ground = GroundSet::from_fs(spec, limits);
    check_coloring(ground, coloring);
    const int n = spec.size();
    if (t > n) return std::nullopt;
    std::uint64_t labelings = 1;
    for (int i = 0; i < n; ++i) {
        if (labelings > limits.max_words / static_cast<std::uint64_t>(t + 1))
            throw Error("enumeration-too-large",
                        "(t+1)^n labelings exceed the cap of " + std::to_string(limits.max_words));
        labelings *= static_cast<std::uint64_t>(t + 1);
    }

    // proof shape: disjoint nonempty index sets I_1..I_t (label j), fixed
    // digits alpha on the free positions (label 0)
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    std::optional<ShiftedFsWitness> found;

    auto try_candidate = [&]() -> bool {
        std::vector<BigInt> ys(static_cast<std::size_t>(t), 0);
        for (int i = 0; i < n; ++i)
            if (labels[static_cast<std::size_t>(i)] > 0)
                ys[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] - 1)] +=
                    spec.generators[static_cast<std::size_t>(i)];
        for (int j = 0; j + 1 < t; ++j)
            if (ys[static_cast<std::size_t>(j)] >= ys[static_cast<std::size_t>(j + 1)]) return false;
        BigInt m = spec.shift;
        for (int i = 0; i < n; ++i)
            if (labels[static_cast<std::size_t>(i)] == 0)
                m += alpha[static_cast<std::size_t>(i)] * spec.generators[static_cast<std::size_t>(i)];
        // all of m + FS^k((ys)) must share one color; m itself is exempt
        std::vector<int> eps(static_cast<std::size_t>(t), 0);
        int color = -1;
        std::vector<BigInt> elements;
        while (true) {
            int pos = t - 1;
            while (pos >= 0 && eps[static_cast<std::size_t>(pos)] == spec.k - 1) {
                eps[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++eps[static_cast<std::size_t>(pos)];
            BigInt value = m;
            for (int j = 0; j < t; ++j) value += eps[static_cast<std::size_t>(j)] * ys[static_cast<std::size_t>(j)];
            int idx = ground.index_of(value);
            if (idx < 0) return false;  // cannot happen: digits stay below k
            int c = coloring.colors[static_cast<std::size_t>(idx)];
            if (color < 0)
                color = c;
            else if (c != color)
                return false;
            elements.push_back(value);
        }
        std::sort(elements.begin(), elements.end());
        found = ShiftedFsWitness{m, std::move(ys), std::move(elements), color};
        return true;
    };

    std::function<bool(int)> assign_alpha = [&](int pos) -> bool {
        while (pos < n && labels[static_cast<std::size_t>(pos)] != 0) ++pos;
        if (pos >= n) return try_candidate();
        for (int digit = 0; digit < spec.k; ++digit) {
            alpha[static_cast<std::size_t>(pos)] = digit;
            if (assign_alpha(pos + 1)) return true;
        }
        return false;
    };
    // Enumerate every labeling; the strict y_1 < ... < y_t filter in
    // try_candidate picks exactly one label order per subset family.
    std::function<bool(int, int)> assign_labels = [&](int pos, int labels_used_mask) -> bool {
        if (pos == n)
            return labels_used_mask == (1 << t) - 1 && assign_alpha(0);
        for (int label = 0; label <= t; ++label) {
            labels[static_cast<std::size_t>(pos)] = label;
            int mask = label == 0 ? labels_used_mask : labels_used_mask | (1 << (label - 1));
            if (assign_labels(pos + 1, mask)) return true;
        }
        labels[static_cast<std::size_t>(pos)] = 0;
        return false;
    };
    assign_labels(0, 0);
    return found;
}

std::optional<MonoWitness> find_mono(const GroundSet& ground, const Coloring& coloring,
                                     const Target& target) {
    check_coloring(ground, coloring);
    const bool values_ground = ground.kind() == GroundSet::Kind::Values;
    switch (target.kind) {
        case Target::Kind::Ap:
            if (!values_ground) throw Error("target-incompatible", "ap target needs a value ground set");
            return mono_ap(ground, coloring, target.length);
        case Target::Kind::Brauer:
            if (!values_ground)
                throw Error("target-incompatible", "brauer target needs a value ground set");
            return mono_brauer(ground, coloring, target.length, target.brauer_s);
        case Target::Kind::Equation:
            if (!values_ground)
                throw Error("target-incompatible", "equation target needs a value ground set");
            return mono_equation(ground, coloring, *target.system, target.distinct);
        case Target::Kind::Line:
            if (values_ground) throw Error("target-incompatible", "line target needs a cube ground set");
            return mono_words(ground, coloring, 1, "line");
        case Target::Kind::Subspace:
            if (values_ground)
                throw Error("target-incompatible", "subspace target needs a cube ground set");
            return mono_words(ground, coloring, target.dim, "subspace");
        case Target::Kind::ShiftedFs: {
            if (!values_ground || !ground.fs_origin())
                throw Error("target-incompatible", "shifted-fs target needs an FS ground set");
            const FsSpec& spec = *ground.fs_origin();
            if (target.fs_k != spec.k)
                throw Error("target-incompatible", "shifted-fs k must match the spec's k");
            auto shifted = find_shifted_fs(spec, coloring, target.fs_t);
            if (!shifted) return std::nullopt;
            MonoWitness w;
            w.kind = "shifted-fs";
            w.color = shifted->color;
            w.elements = shifted->elements;
            w.shifted = std::move(shifted);
            return w;
        }
    }
    throw Error("target-incompatible", "unknown target kind");
}

// ---------------------------------------------------------------------------
// Universal-coloring search

namespace {

struct BudgetHit {};

struct InstanceTable {
    std::vector<std::vector<int>> instances;  // sorted element-index lists
    std::vector<std::vector<int>> incidence;  // element -> instance ids
};

// shared budget meter for instance construction and the coloring DFS
struct WorkMeter {
    std::uint64_t spent = 0;
    std::uint64_t budget = 0;

    void tick() {
        if (++spent > budget) throw BudgetHit{};
    }
};

void finish_table(std::set<std::vector<int>>& raw, std::size_t n_elements, InstanceTable& out) {
    out.instances.assign(raw.begin(), raw.end());
    out.incidence.assign(n_elements, {});
    for (std::size_t id = 0; id < out.instances.size(); ++id)
        for (int e : out.instances[id])
            out.incidence[static_cast<std::size_t>(e)].push_back(static_cast<int>(id));
}

// Instance enumeration for the searcher. Deliberately plain loops; the
// verification route goes through find_mono instead.
InstanceTable build_instances(const GroundSet& g, const Target& target, WorkMeter& meter) {
    InstanceTable table;
    std::set<std::vector<int>> raw;
    const bool values_ground = g.kind() == GroundSet::Kind::Values;

    switch (target.kind) {
        case Target::Kind::Ap: {
            if (!values_ground) throw Error("target-incompatible", "ap target needs a value ground set");
            const auto& v = g.values();
            for (std::size_t i = 0; i < v.size(); ++i) {
                for (std::size_t j = i + 1; j < v.size(); ++j) {
                    meter.tick();
                    BigInt d = v[j] - v[i];
                    if (v[i] + (target.length - 1) * d > v.back()) break;
                    std::vector<int> inst{static_cast<int>(i), static_cast<int>(j)};
                    BigInt term = v[j];
                    bool ok = true;
                    for (int q = 2; q < target.length && ok; ++q) {
                        term += d;
                        int idx = g.index_of(term);
                        if (idx < 0)
                            ok = false;
                        else
                            inst.push_back(idx);
                    }
                    if (ok) raw.insert(std::move(inst));
                }
            }
            break;
        }
        case Target::Kind::Brauer: {
            if (!values_ground)
                throw Error("target-incompatible", "brauer target needs a value ground set");
            const auto& v = g.values();
            if (target.length == 1) {
                for (std::size_t i = 0; i < v.size(); ++i) {
                    for (std::size_t u = 0; u < v.size(); ++u) {
                        meter.tick();
                        if (v[u] < target.brauer_s || v[u] % target.brauer_s != 0) continue;
                        std::vector<int> inst{static_cast<int>(i), static_cast<int>(u)};
                        std::sort(inst.begin(), inst.end());
                        inst.erase(std::unique(inst.begin(), inst.end()), inst.end());
                        raw.insert(std::move(inst));
                    }
                }
                break;
            }
            for (std::size_t i = 0; i < v.size(); ++i) {
                for (std::size_t j = i + 1; j < v.size(); ++j) {
                    meter.tick();
                    BigInt d = v[j] - v[i];
                    if (v[i] + (target.length - 1) * d > v.back()) break;
                    std::vector<int> inst{static_cast<int>(i), static_cast<int>(j)};
                    BigInt term = v[j];
                    bool ok = true;
                    for (int q = 2; q < target.length && ok; ++q) {
                        term += d;
                        int idx = g.index_of(term);
                        if (idx < 0)
                            ok = false;
                        else
                            inst.push_back(idx);
                    }
                    if (!ok) continue;
                    int sd = g.index_of(target.brauer_s * d);
                    if (sd < 0) continue;
                    inst.push_back(sd);
                    std::sort(inst.begin(), inst.end());
                    inst.erase(std::unique(inst.begin(), inst.end()), inst.end());
                    raw.insert(std::move(inst));
                }
            }
            break;
        }
        case Target::Kind::Equation: {
            if (!values_ground)
                throw Error("target-incompatible", "equation target needs a value ground set");
            const auto& v = g.values();
            const LinearSystem& sys = *target.system;
            const int n = sys.cols;
            int pivot_row = -1;
            for (int row = 0; row < sys.rows && pivot_row < 0; ++row)
                if (sys.at(row, n - 1) != 0) pivot_row = row;
            std::vector<BigInt> x(static_cast<std::size_t>(n));
            std::function<void(int)> walk = [&](int var) {
                meter.tick();
                if (var == n - 1) {
                    BigInt acc = 0;
                    for (int i = 0; i < n - 1; ++i)
                        acc += sys.at(pivot_row, i) * x[static_cast<std::size_t>(i)];
                    const BigInt& an = sys.at(pivot_row, n - 1);
                    if (acc % an != 0) return;
                    BigInt last = -acc / an;
                    int idx = g.index_of(last);
                    if (idx < 0) return;
                    x[static_cast<std::size_t>(n - 1)] = last;
                    if (target.distinct)
                        for (int i = 0; i < n - 1; ++i)
                            if (x[static_cast<std::size_t>(i)] == last) return;
                    for (int row = 0; row < sys.rows; ++row) {
                        BigInt check = 0;
                        for (int i = 0; i < n; ++i)
                            check += sys.at(row, i) * x[static_cast<std::size_t>(i)];
                        if (check != 0) return;
                    }
                    std::vector<int> inst;
                    for (int i = 0; i < n; ++i) inst.push_back(g.index_of(x[static_cast<std::size_t>(i)]));
                    std::sort(inst.begin(), inst.end());
                    inst.erase(std::unique(inst.begin(), inst.end()), inst.end());
                    raw.insert(std::move(inst));
                    return;
                }
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (target.distinct) {
                        bool dup = false;
                        for (int q = 0; q < var && !dup; ++q)
                            dup = x[static_cast<std::size_t>(q)] == v[i];
                        if (dup) continue;
                    }
                    x[static_cast<std::size_t>(var)] = v[i];
                    walk(var + 1);
                }
            };
            walk(0);
            break;
        }
        case Target::Kind::Line:
        case Target::Kind::Subspace: {
            if (values_ground)
                throw Error("target-incompatible", "line/subspace targets need a cube ground set");
            const int t = g.cube_t();
            const int n = g.cube_n();
            const int dim = target.kind == Target::Kind::Line ? 1 : target.dim;
            if (dim > n) break;
            // odometer over the alphabet {digits} + {v_1..v_dim}; symbol t+j is v_{j+1}
            std::vector<int> word(static_cast<std::size_t>(n), 0);
            while (true) {
                meter.tick();
                int used = 0;
                bool canonical = true;
                for (int i = 0; i < n && canonical; ++i) {
                    int sym = word[static_cast<std::size_t>(i)];
                    if (sym >= t) {
                        int var = sym - t + 1;
                        if (var > used + 1)
                            canonical = false;  // variables must appear in order
                        else if (var == used + 1)
                            used = var;
                    }
                }
                if (canonical && used == dim) {
                    std::vector<int> inst;
                    std::vector<int> vals(static_cast<std::size_t>(dim), 0);
                    while (true) {
                        std::vector<int> point(static_cast<std::size_t>(n));
                        for (int i = 0; i < n; ++i) {
                            int sym = word[static_cast<std::size_t>(i)];
                            point[static_cast<std::size_t>(i)] =
                                sym < t ? sym : vals[static_cast<std::size_t>(sym - t)];
                        }
                        inst.push_back(static_cast<int>(g.cube_index(point)));
                        int pos = dim - 1;
                        while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == t - 1) {
                            vals[static_cast<std::size_t>(pos)] = 0;
                            --pos;
                        }
                        if (pos < 0) break;
                        ++vals[static_cast<std::size_t>(pos)];
                    }
                    std::sort(inst.begin(), inst.end());
                    inst.erase(std::unique(inst.begin(), inst.end()), inst.end());
                    raw.insert(std::move(inst));
                }
                int pos = n - 1;
                while (pos >= 0 && word[static_cast<std::size_t>(pos)] == t + dim - 1) {
                    word[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++word[static_cast<std::size_t>(pos)];
            }
            break;
        }
        case Target::Kind::ShiftedFs: {
            if (!values_ground || !g.fs_origin())
                throw Error("target-incompatible", "shifted-fs target needs an FS ground set");
            const FsSpec& spec = *g.fs_origin();
            if (target.fs_k != spec.k)
                throw Error("target-incompatible", "shifted-fs k must match the spec's k");
            const int n = spec.size();
            const int t = target.fs_t;
            if (t > n) break;
            std::vector<int> labels(static_cast<std::size_t>(n), 0);
            std::vector<int> alpha(static_cast<std::size_t>(n), 0);
            std::function<void()> emit = [&]() {
                meter.tick();
                std::vector<BigInt> ys(static_cast<std::size_t>(t), 0);
                for (int i = 0; i < n; ++i)
                    if (labels[static_cast<std::size_t>(i)] > 0)
                        ys[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] - 1)] +=
                            spec.generators[static_cast<std::size_t>(i)];
                for (int j = 0; j + 1 < t; ++j)
                    if (ys[static_cast<std::size_t>(j)] >= ys[static_cast<std::size_t>(j + 1)]) return;
                BigInt m = spec.shift;
                for (int i = 0; i < n; ++i)
                    if (labels[static_cast<std::size_t>(i)] == 0)
                        m += alpha[static_cast<std::size_t>(i)] *
                             spec.generators[static_cast<std::size_t>(i)];
                std::vector<int> inst;
                std::vector<int> eps(static_cast<std::size_t>(t), 0);
                while (true) {
                    int pos = t - 1;
                    while (pos >= 0 && eps[static_cast<std::size_t>(pos)] == spec.k - 1) {
                        eps[static_cast<std::size_t>(pos)] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                    ++eps[static_cast<std::size_t>(pos)];
                    BigInt value = m;
                    for (int j = 0; j < t; ++j)
                        value += eps[static_cast<std::size_t>(j)] * ys[static_cast<std::size_t>(j)];
                    inst.push_back(g.index_of(value));
                }
                std::sort(inst.begin(), inst.end());
                inst.erase(std::unique(inst.begin(), inst.end()), inst.end());
                raw.insert(std::move(inst));
            };
            std::function<void(int)> fill_alpha = [&](int pos) {
                while (pos < n && labels[static_cast<std::size_t>(pos)] != 0) ++pos;
                if (pos >= n) {
                    emit();
                    return;
                }
                for (int digit = 0; digit < spec.k; ++digit) {
                    alpha[static_cast<std::size_t>(pos)] = digit;
                    fill_alpha(pos + 1);
                }
            };
            std::function<void(int, int)> fill_labels = [&](int pos, int labels_used_mask) {
                if (pos == n) {
                    if (labels_used_mask == (1 << t) - 1) fill_alpha(0);
                    return;
                }
                for (int label = 0; label <= t; ++label) {
                    labels[static_cast<std::size_t>(pos)] = label;
                    int mask = label == 0 ? labels_used_mask : labels_used_mask | (1 << (label - 1));
                    fill_labels(pos + 1, mask);
                }
                labels[static_cast<std::size_t>(pos)] = 0;
            };
            fill_labels(0, 0);
            break;
        }
    }
    finish_table(raw, g.size(), table);
    return table;
}

// DFS over canonical colorings (each color first appears after all smaller
// ones). Per instance we track how many elements are unassigned and which
// colors could still make it monochromatic; an instance completing with a
// live color prunes the branch, and once every instance is dead the branch
// completes to a counterexample immediately.
class ColoringSearch {
public:
    ColoringSearch(const InstanceTable& table, std::size_t n, int r, std::uint64_t budget)
        : table_(table), n_(n), r_(r), budget_(budget) {
        colors_.assign(n_, -1);
        remaining_.reserve(table_.instances.size());
        mask_.reserve(table_.instances.size());
        for (const auto& inst : table_.instances) {
            remaining_.push_back(static_cast<int>(inst.size()));
            mask_.push_back(r_ >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << r_) - 1);
        }
        alive_ = static_cast<int>(table_.instances.size());
    }

    std::uint64_t explored() const { return explored_; }

    // Replays a fixed prefix, then searches the subtree. Returns the
    // counterexample coloring if one exists in this branch.
    std::optional<std::vector<int>> run(std::span<const int> prefix,
                                        const std::function<bool()>& should_abort) {
        abort_ = &should_abort;
        int max_used = -1;
        for (std::size_t e = 0; e < prefix.size(); ++e) {
            int c = prefix[e];
            std::size_t mark = trail_.size();
            if (assign(static_cast<int>(e), c)) {
                undo(mark);
                return std::nullopt;  // prefix already forces a mono instance
            }
            max_used = std::max(max_used, c);
        }
        if (dfs(static_cast<int>(prefix.size()), max_used))
            return colors_;
        return std::nullopt;
    }

private:
    bool dfs(int depth, int max_used) {
        if (explored_ > budget_) throw BudgetHit{};
        if ((explored_ & 1023) == 0 && *abort_ && (*abort_)()) throw BudgetHit{};
        if (alive_ == 0) {
            // nothing can become monochromatic anymore: the lexicographically
            // least completion colors the rest 0
            for (std::size_t e = static_cast<std::size_t>(depth); e < n_; ++e) colors_[e] = 0;
            explored_ += n_ - static_cast<std::size_t>(depth);
            return true;
        }
        if (depth == static_cast<int>(n_)) return true;
        int limit = std::min(max_used + 1, r_ - 1);
        for (int c = 0; c <= limit; ++c) {
            std::size_t mark = trail_.size();
            if (!assign(depth, c)) {
                if (dfs(depth + 1, std::max(max_used, c))) return true;
            }
            undo(mark);
        }
        return false;
    }

    // true = some instance just became fully assigned and monochromatic
    bool assign(int element, int color) {
        ++explored_;
        colors_[static_cast<std::size_t>(element)] = color;
        bool mono = false;
        for (int id : table_.incidence[static_cast<std::size_t>(element)]) {
            auto idx = static_cast<std::size_t>(id);
            if (mask_[idx] == 0) continue;
            trail_.push_back({id, mask_[idx], remaining_[idx]});
            mask_[idx] &= std::uint32_t{1} << color;
            remaining_[idx] -= 1;
            if (mask_[idx] == 0) {
                --alive_;
            } else if (remaining_[idx] == 0) {
                mono = true;
            }
        }
        return mono;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [id, mask, remaining] = trail_.back();
            trail_.pop_back();
            auto idx = static_cast<std::size_t>(id);
            if (mask_[idx] == 0) ++alive_;
            mask_[idx] = mask;
            remaining_[idx] = remaining;
        }
    }

    struct TrailEntry {
        int id;
        std::uint32_t mask;
        int remaining;
    };

    const InstanceTable& table_;
    std::size_t n_;
    int r_;
    std::uint64_t budget_;
    std::uint64_t explored_ = 0;
    std::vector<int> colors_;
    std::vector<std::uint32_t> mask_;
    std::vector<int> remaining_;
    std::vector<TrailEntry> trail_;
    int alive_ = 0;
    const std::function<bool()>* abort_ = nullptr;
};

// Canonical color prefixes of the given depth; task order = lexicographic.
std::vector<std::vector<int>> canonical_prefixes(std::size_t n, int r, int depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    std::function<void(int, int)> gen = [&](int pos, int max_used) {
        if (pos == depth || static_cast<std::size_t>(pos) == n) {
            out.push_back(prefix);
            return;
        }
        int limit = std::min(max_used + 1, r - 1);
        for (int c = 0; c <= limit; ++c) {
            prefix.push_back(c);
            gen(pos + 1, std::max(max_used, c));
            prefix.pop_back();
        }
    };
    gen(0, -1);
    return out;
}

}  // namespace

Verdict forall_colorings(const GroundSet& ground, int r, const Target& target,
                         const SearchOptions& options) {
    if (r < 1 || r > 16) throw Error("malformed-input", "color count must be in 1..16");
    const std::size_t n = ground.size();

    Verdict verdict;
    verdict.budget = options.budget;
    verdict.seed = options.seed;

    // instance construction spends from the same budget as the coloring DFS
    WorkMeter meter{0, options.budget};
    InstanceTable table;
    try {
        table = build_instances(ground, target, meter);
    } catch (const BudgetHit&) {
        verdict.status = Verdict::Status::Inconclusive;
        verdict.explored = meter.spent;
        return verdict;
    }

    // Fixed task decomposition (independent of worker count) keeps verdicts,
    // witnesses and explored counts schedule-invariant.
    int depth = 0;
    while (static_cast<std::size_t>(depth) < n &&
           canonical_prefixes(n, r, depth).size() < 32 && depth < 12)
        ++depth;
    std::vector<std::vector<int>> tasks = canonical_prefixes(n, r, depth);
    const std::size_t ntasks = tasks.size();
    std::uint64_t task_budget =
        std::max<std::uint64_t>(1, (options.budget - meter.spent) / ntasks);
    verdict.explored = meter.spent;

    enum { EXHAUSTED, FOUND, BUDGET, ABORTED };
    struct TaskOutcome {
        int kind = ABORTED;
        std::vector<int> coloring;
        std::uint64_t explored = 0;
    };
    std::vector<TaskOutcome> results(ntasks);
    std::atomic<std::size_t> next{0};
    std::atomic<int> best_found{INT_MAX};

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= ntasks) break;
            if (best_found.load() < static_cast<int>(i)) continue;  // stays ABORTED
            ColoringSearch search(table, n, r, task_budget);
            auto should_abort = [&best_found, i]() {
                return best_found.load() < static_cast<int>(i);
            };
            TaskOutcome outcome;
            try {
                auto cex = search.run(tasks[i], should_abort);
                outcome.explored = search.explored();
                if (cex) {
                    outcome.kind = FOUND;
                    outcome.coloring = std::move(*cex);
                    int expect = best_found.load();
                    while (static_cast<int>(i) < expect &&
                           !best_found.compare_exchange_weak(expect, static_cast<int>(i))) {
                    }
                } else {
                    outcome.kind = EXHAUSTED;
                }
            } catch (const BudgetHit&) {
                outcome.explored = search.explored();
                outcome.kind = should_abort() ? ABORTED : BUDGET;
            }
            results[i] = std::move(outcome);
        }
    };

    int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::size_t winner = ntasks;
    for (std::size_t i = 0; i < ntasks; ++i)
        if (results[i].kind == FOUND) {
            winner = i;
            break;
        }

    if (winner < ntasks) {
        verdict.status = Verdict::Status::Fails;
        Coloring cex{results[winner].coloring, r};
        if (find_mono(ground, cex, target))
            throw Error("internal", "counterexample failed re-verification");
        verdict.counterexample = std::move(cex);
        for (std::size_t i = 0; i <= winner; ++i) verdict.explored += results[i].explored;
        return verdict;
    }
    bool budget_hit = false;
    for (std::size_t i = 0; i < ntasks; ++i) {
        verdict.explored += results[i].explored;
        budget_hit = budget_hit || results[i].kind == BUDGET;
    }
    verdict.status = budget_hit ? Verdict::Status::Inconclusive : Verdict::Status::Holds;
    return verdict;
}

namespace {

NumberResult number_scan(int cap, const SearchOptions& options,
                         const std::function<GroundSet(int)>& ground_for,
                         const Target& target, int r) {
    NumberResult result;
    for (int n = 1; n <= cap; ++n) {
        Verdict v = forall_colorings(ground_for(n), r, target, options);
        result.explored += v.explored;
        if (v.status == Verdict::Status::Inconclusive) {
            result.budget_hit = true;
            return result;
        }
        if (v.status == Verdict::Status::Holds) {
            result.value = n;
            return result;
        }
        result.counterexample_n = n;
        result.counterexample = std::move(v.counterexample);
    }
    return result;  // unknown beyond cap
}

}  // namespace

NumberResult vdw_number(int r, int k, int cap, const SearchOptions& options) {
    if (r < 1) throw Error("malformed-input", "need at least one color");
    if (cap < 1) throw Error("malformed-input", "cap must be >= 1");
    return number_scan(
        cap, options, [](int n) { return GroundSet::interval(1, n); }, Target::ap(k), r);
}

NumberResult brauer_number(int r, int k, const BigInt& s, int cap, const SearchOptions& options) {
    if (r < 1) throw Error("malformed-input", "need at least one color");
    if (cap < 1) throw Error("malformed-input", "cap must be >= 1");
    return number_scan(
        cap, options, [](int n) { return GroundSet::interval(1, n); }, Target::brauer(k, s), r);
}

NumberResult hj_number(int r, int t, int cap, const SearchOptions& options) {
    if (r < 1) throw Error("malformed-input", "need at least one color");
    if (t < 2) throw Error("malformed-input", "cube alphabet needs t >= 2");
    if (cap < 1) throw Error("malformed-input", "cap must be >= 1");
    return number_scan(
        cap, options, [t](int n) { return GroundSet::cube(t, n); }, Target::line(), r);
}

PseudoNeatResult check_pseudo_neat(const ShiftInvariantEq& eq, int k, int t,
                                   const SearchOptions& options) {
    validate_equation(eq);
    if (k < 2) throw Error("malformed-input", "k must be >= 2");
    if (t < 1) throw Error("malformed-input", "t must be >= 1");
    const int n = eq.vars();
    BigInt max_coeff = 0;
    for (const auto& a : eq.left) max_coeff = std::max(max_coeff, a);
    for (const auto& a : eq.right) max_coeff = std::max(max_coeff, a);

    PseudoNeatResult result;
    result.base = k * n * max_coeff + 1;

    FsSpec spec;
    spec.k = k;
    for (int j = 1; j <= t; ++j) spec.generators.push_back(big_pow(result.base, static_cast<unsigned long>(j)));
    FsTable table(spec);
    if (!table.distinct_sums()) throw Error("internal", "power spec lost distinct sums");
    const auto& sums = table.sums();  // sums[0] == 0, the rest is the FS set
    auto coeffs = eq.signed_coefficients();
    const BigInt& last_coeff = eq.right.back();  // coefficient of x_n, sign dropped

    std::vector<BigInt> x(static_cast<std::size_t>(n));
    std::uint64_t explored = 0;
    bool budget_hit = false;
    std::function<bool(int)> walk = [&](int var) -> bool {
        if (++explored > options.budget) {
            budget_hit = true;
            return false;
        }
        if (var == n - 1) {
            BigInt acc = 0;
            for (int i = 0; i < n - 1; ++i) acc += coeffs[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            if (acc <= 0 || acc % last_coeff != 0) return false;
            BigInt last = acc / last_coeff;
            if (!table.contains(last) || last == 0) return false;
            for (int i = 0; i < n - 1; ++i)
                if (x[static_cast<std::size_t>(i)] == last) return false;
            x[static_cast<std::size_t>(n - 1)] = last;
            return true;
        }
        for (std::size_t s = 1; s < sums.size(); ++s) {
            bool dup = false;
            for (int q = 0; q < var && !dup; ++q) dup = x[static_cast<std::size_t>(q)] == sums[s];
            if (dup) continue;
            x[static_cast<std::size_t>(var)] = sums[s];
            if (walk(var + 1)) return true;
            if (budget_hit) return false;
        }
        return false;
    };
    bool found = walk(0);
    result.explored = explored;
    if (budget_hit) {
        result.status = Verdict::Status::Inconclusive;
        return result;
    }
    if (!found) {
        result.status = Verdict::Status::Fails;
        return result;
    }

    // digit matrix: row i = base-B digits of x_i; per-column identities carry
    // the solution to every distinct-sums spec of length t
    std::vector<std::vector<BigInt>> digits;
    for (int i = 0; i < n; ++i) {
        auto word = table.lookup(x[static_cast<std::size_t>(i)]);
        if (!word) throw Error("internal", "solution entry fell outside the table");
        std::vector<BigInt> row;
        for (int digit : word->digits) row.emplace_back(digit);
        digits.push_back(std::move(row));
    }
    for (int j = 0; j < t; ++j) {
        BigInt acc = 0;
        for (int i = 0; i < n; ++i)
            acc += coeffs[static_cast<std::size_t>(i)] * digits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (acc != 0) throw Error("internal", "digit column does not solve the equation");
    }
    result.status = Verdict::Status::Holds;
    result.solution = x;
    result.digit_matrix = std::move(digits);
    return result;
}

}  // namespace finsum
