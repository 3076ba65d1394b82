#include "finsum/fs_core.hpp"

#include <algorithm>

namespace finsum {

void validate_spec(const FsSpec& spec) {
    if (spec.k < 2) throw Error("invalid-spec", "multiplicity bound k must be >= 2");
    if (spec.generators.empty()) throw Error("invalid-spec", "at least one generator required");
    if (spec.shift < 0) throw Error("invalid-spec", "shift must be non-negative");
    BigInt prev = 0;
    for (const auto& g : spec.generators) {
        if (g <= prev)
            throw Error("invalid-spec", "generators must be strictly increasing and positive");
        prev = g;
    }
}

bool EpsilonWord::is_zero() const {
    return std::all_of(digits.begin(), digits.end(), [](int d) { return d == 0; });
}

void validate_word(const ParametricWord& word) {
    if (word.dim < 1) throw Error("malformed-input", "parametric word needs dim >= 1");
    if (word.k < 2) throw Error("malformed-input", "alphabet bound k must be >= 2");
    std::vector<bool> seen(static_cast<std::size_t>(word.dim), false);
    bool any_var = false;
    for (int cell : word.cells) {
        if (cell >= 0) {
            if (cell >= word.k)
                throw Error("malformed-input", "digit cell out of alphabet range");
        } else {
            int var = -cell;
            if (var > word.dim)
                throw Error("malformed-input", "variable index exceeds declared dimension");
            seen[static_cast<std::size_t>(var - 1)] = true;
            any_var = true;
        }
    }
    if (!any_var) throw Error("malformed-input", "parametric word needs a variable cell");
    for (bool s : seen)
        if (!s) throw Error("malformed-input", "declared variable never occurs");
}

EpsilonWord substitute(const ParametricWord& word, std::span<const int> value_for_var) {
    if (static_cast<int>(value_for_var.size()) != word.dim)
        throw Error("dimension-mismatch", "substitution needs one value per variable");
    EpsilonWord out;
    out.k = word.k;
    out.digits.reserve(word.cells.size());
    for (int cell : word.cells) {
        int digit = cell >= 0 ? cell : value_for_var[static_cast<std::size_t>(-cell - 1)];
        out.digits.push_back(digit);
    }
    return out;
}

std::vector<BigInt> ArithProgression::terms() const {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(len));
    BigInt t = a;
    for (int j = 0; j < len; ++j) {
        out.push_back(t);
        t += d;
    }
    return out;
}

namespace {

std::uint64_t checked_word_count(const FsSpec& spec, const EnumLimits& limits) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (count > limits.max_words / static_cast<std::uint64_t>(spec.k))
            throw Error("enumeration-too-large",
                        "k^n exceeds the enumeration cap of " + std::to_string(limits.max_words));
        count *= static_cast<std::uint64_t>(spec.k);
    }
    return count;
}

// All k^n sums (zero word included, shift excluded), in digit-odometer order.
std::vector<BigInt> all_cube_sums(const FsSpec& spec, const EnumLimits& limits) {
    checked_word_count(spec, limits);
    std::vector<BigInt> sums{BigInt(0)};
    for (const auto& g : spec.generators) {
        std::vector<BigInt> next;
        next.reserve(sums.size() * static_cast<std::size_t>(spec.k));
        BigInt step = 0;
        for (int digit = 0; digit < spec.k; ++digit) {
            for (const auto& s : sums) next.push_back(s + step);
            step += g;
        }
        sums.swap(next);
    }
    return sums;
}

}  // namespace

std::vector<BigInt> fs_enumerate(const FsSpec& spec, const EnumLimits& limits) {
    validate_spec(spec);
    std::vector<BigInt> sums = all_cube_sums(spec, limits);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    // the zero word is the unique word summing to 0
    sums.erase(sums.begin());
    if (spec.shift != 0)
        for (auto& s : sums) s += spec.shift;
    return sums;
}

bool has_distinct_sums(const FsSpec& spec, const EnumLimits& limits) {
    validate_spec(spec);
    std::vector<BigInt> sums = all_cube_sums(spec, limits);
    std::size_t total = sums.size();
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums.size() == total;
}

FsSpec sparse_generators(int k, int n, const BigInt& seed_value) {
    if (k < 2) throw Error("invalid-spec", "multiplicity bound k must be >= 2");
    if (n < 1) throw Error("invalid-spec", "need at least one generator");
    if (seed_value < 1) throw Error("invalid-spec", "seed must be positive");
    FsSpec spec;
    spec.k = k;
    spec.generators.reserve(static_cast<std::size_t>(n));
    spec.generators.push_back(seed_value);
    BigInt total = seed_value;
    for (int j = 1; j < n; ++j) {
        // max FS^k(x_1..x_j) = (k-1) * (x_1 + ... + x_j)
        BigInt next = 2 * (k - 1) * total + 1;
        spec.generators.push_back(next);
        total += next;
    }
    return spec;
}

std::vector<BigInt> ip_bar_enumerate(std::span<const BigInt> generators, int n,
                                     IpBarDigits digits) {
    if (n < 1 || n > static_cast<int>(generators.size()))
        throw Error("malformed-input", "n must be between 1 and the generator count");
    BigInt prev = 0;
    for (int i = 0; i < n; ++i) {
        if (generators[static_cast<std::size_t>(i)] <= prev)
            throw Error("invalid-spec", "generators must be strictly increasing and positive");
        prev = generators[static_cast<std::size_t>(i)];
    }
    std::vector<BigInt> sums{BigInt(0)};
    for (int i = 1; i <= n; ++i) {
        int bound = digits == IpBarDigits::Literal ? i : i + 1;  // e_i in [0, bound)
        const BigInt& g = generators[static_cast<std::size_t>(i - 1)];
        std::vector<BigInt> next;
        next.reserve(sums.size() * static_cast<std::size_t>(bound));
        BigInt step = 0;
        for (int digit = 0; digit < bound; ++digit) {
            for (const auto& s : sums) next.push_back(s + step);
            step += g;
        }
        sums.swap(next);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

BigInt word_to_sum(const EpsilonWord& word, const FsSpec& spec) {
    validate_spec(spec);
    if (word.digits.size() != spec.generators.size())
        throw Error("dimension-mismatch", "word length must match generator count");
    if (word.k != spec.k)
        throw Error("dimension-mismatch", "word digit bound must match spec k");
    BigInt sum = spec.shift;
    for (std::size_t i = 0; i < word.digits.size(); ++i) {
        int d = word.digits[i];
        if (d < 0 || d >= spec.k) throw Error("malformed-input", "digit out of range");
        sum += d * spec.generators[i];
    }
    return sum;
}

EpsilonWord sum_to_word(const BigInt& s, const FsSpec& spec, const EnumLimits& limits) {
    FsTable table(spec, limits);
    if (!table.distinct_sums())
        throw Error("ambiguous-representation",
                    "spec does not have distinct sums; words are not unique");
    auto word = table.lookup(s);
    if (!word)
        throw Error("not-a-member", to_decimal(s) + " is not a sum of this spec");
    return *word;
}

std::optional<std::vector<BigInt>> signed_digit_decompose(const BigInt& x, const BigInt& base,
                                                          int m, const BigInt& bound) {
    if (base < 2) throw Error("malformed-input", "base must be >= 2");
    if (m < 1) throw Error("malformed-input", "digit count must be >= 1");
    if (bound < 0 || 2 * bound >= base)
        throw Error("malformed-input", "uniqueness needs 0 <= bound < base/2");
    // x = g_1 B + g_2 B^2 + ... + g_m B^m: divide out one power, then peel
    // balanced residues.
    if (x % base != 0) return std::nullopt;
    BigInt rest = x / base;
    std::vector<BigInt> digits;
    digits.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        BigInt r = rest % base;  // GMP: sign follows the dividend
        if (r < 0) r += base;
        BigInt digit;
        if (r <= bound) {
            digit = r;
        } else if (base - r <= bound) {
            digit = r - base;
        } else {
            return std::nullopt;
        }
        digits.push_back(digit);
        rest = (rest - digit) / base;
    }
    if (rest != 0) return std::nullopt;
    return digits;
}

LineAp line_to_ap(const ParametricWord& word, const FsSpec& spec) {
    validate_spec(spec);
    validate_word(word);
    if (word.dim != 1)
        throw Error("dimension-mismatch", "line_to_ap expects a single-variable word");
    if (word.cells.size() != spec.generators.size())
        throw Error("dimension-mismatch", "word length must match generator count");
    if (word.k != spec.k)
        throw Error("dimension-mismatch", "word alphabet bound must match spec k");
    BigInt a = spec.shift;
    BigInt d = 0;
    for (std::size_t i = 0; i < word.cells.size(); ++i) {
        if (word.cells[i] >= 0)
            a += word.cells[i] * spec.generators[i];
        else
            d += spec.generators[i];
    }
    LineAp out;
    out.ap = ArithProgression{a, d, spec.k};
    out.includes_zero = (a == 0);
    return out;
}

std::optional<ParametricWord> ap_to_line(const ArithProgression& ap, const FsSpec& spec,
                                         const EnumLimits& limits) {
    validate_spec(spec);
    return ap_to_line(ap, FsTable(spec, limits));
}

std::optional<ParametricWord> ap_to_line(const ArithProgression& ap, const FsTable& table) {
    const FsSpec& spec = table.spec();
    if (ap.len < 2 || ap.d < 1) throw Error("malformed-input", "degenerate progression");
    if (!table.distinct_sums())
        throw Error("ambiguous-representation",
                    "ap_to_line requires a spec with distinct sums");
    // A line has exactly k points, ascending in the variable value.
    if (ap.len != spec.k) return std::nullopt;
    std::vector<EpsilonWord> words;
    BigInt term = ap.a;
    for (int j = 0; j < ap.len; ++j) {
        auto w = table.lookup(term);
        if (!w || w->is_zero())
            throw Error("term-not-in-set",
                        "progression term " + to_decimal(term) + " is outside the sum set");
        words.push_back(*w);
        term += ap.d;
    }
    // Variable positions must read 0,1,...,k-1 down the column; the rest must
    // be constant.
    std::size_t n = words[0].digits.size();
    ParametricWord out;
    out.k = spec.k;
    out.dim = 1;
    out.cells.resize(n);
    bool any_var = false;
    for (std::size_t i = 0; i < n; ++i) {
        bool constant = true;
        for (int j = 1; j < ap.len && constant; ++j)
            constant = words[static_cast<std::size_t>(j)].digits[i] == words[0].digits[i];
        if (constant) {
            out.cells[i] = words[0].digits[i];
            continue;
        }
        for (int j = 0; j < ap.len; ++j)
            if (words[static_cast<std::size_t>(j)].digits[i] != j) return std::nullopt;
        out.cells[i] = -1;
        any_var = true;
    }
    if (!any_var) return std::nullopt;
    return out;
}

MaxApResult max_ap_length(std::span<const BigInt> values) {
    if (values.empty()) throw Error("malformed-input", "empty value list");
    const std::size_t m = values.size();
    if (m > 8192)
        throw Error("enumeration-too-large", "quadratic AP table capped at 8192 values");
    MaxApResult best;
    best.length = 1;
    if (m == 1) return best;

    // len[i][j] = length of the longest AP ending with (values[i], values[j]).
    // Processing i in ascending order makes len[h][i] available when (i, j)
    // asks for it.
    std::vector<std::int32_t> len(m * m, 0);
    auto idx_of = [&](const BigInt& v) -> std::int64_t {
        auto it = std::lower_bound(values.begin(), values.end(), v);
        if (it == values.end() || *it != v) return -1;
        return it - values.begin();
    };
    int best_len = 1;
    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            BigInt prev = 2 * values[i] - values[j];
            std::int64_t h = idx_of(prev);
            std::int32_t l;
            if (h >= 0 && static_cast<std::size_t>(h) < i)
                l = len[static_cast<std::size_t>(h) * m + i] + 1;
            else
                l = 2;
            len[i * m + j] = l;
            if (l > best_len) {
                best_len = l;
                best_i = i;
                best_j = j;
            }
        }
    }
    best.length = best_len;
    if (best_len >= 2) {
        BigInt d = values[best_j] - values[best_i];
        BigInt a = values[best_j] - (best_len - 1) * d;
        best.witness = ArithProgression{a, d, best_len};
    }
    return best;
}

FsTable::FsTable(const FsSpec& spec, const EnumLimits& limits) : spec_(spec) {
    validate_spec(spec);
    std::uint64_t total = checked_word_count(spec, limits);
    const int n = spec.size();
    std::vector<std::pair<BigInt, std::vector<int>>> entries;
    entries.reserve(total);
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    BigInt sum = spec.shift;
    // odometer over digit vectors, maintaining the running sum
    while (true) {
        entries.emplace_back(sum, word);
        int pos = 0;
        while (pos < n && word[static_cast<std::size_t>(pos)] == spec.k - 1) {
            sum -= (spec.k - 1) * spec.generators[static_cast<std::size_t>(pos)];
            word[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
        word[static_cast<std::size_t>(pos)] += 1;
        sum += spec.generators[static_cast<std::size_t>(pos)];
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    distinct_ = true;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i].first == entries[i + 1].first) {
            distinct_ = false;
            break;
        }
    sums_.reserve(entries.size());
    words_.reserve(entries.size());
    for (auto& [s, w] : entries) {
        sums_.push_back(std::move(s));
        words_.push_back(std::move(w));
    }
}

std::optional<EpsilonWord> FsTable::lookup(const BigInt& s) const {
    auto it = std::lower_bound(sums_.begin(), sums_.end(), s);
    if (it == sums_.end() || *it != s) return std::nullopt;
    EpsilonWord word;
    word.k = spec_.k;
    word.digits = words_[static_cast<std::size_t>(it - sums_.begin())];
    return word;
}

bool FsTable::contains(const BigInt& s) const {
    return std::binary_search(sums_.begin(), sums_.end(), s);
}

}  // namespace finsum
