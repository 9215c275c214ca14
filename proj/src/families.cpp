#include "ordex/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace ordex {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// ----------------------------------------------------------------- IndexSet

IndexSet::IndexSet(Kind kind, std::vector<std::uint64_t> values, std::uint64_t seed)
    : kind_(kind), values_(std::move(values)), seed_(seed) {}

IndexSet IndexSet::evens() { return IndexSet(Kind::Evens, {}, 0); }
IndexSet IndexSet::odds() { return IndexSet(Kind::Odds, {}, 0); }
IndexSet IndexSet::primes() { return IndexSet(Kind::Primes, {}, 0); }

IndexSet IndexSet::explicit_list(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return IndexSet(Kind::ExplicitList, std::move(values), 0);
}

IndexSet IndexSet::pseudorandom(std::uint64_t seed) {
    return IndexSet(Kind::Pseudorandom, {}, seed);
}

bool IndexSet::contains(std::uint64_t n) const {
    switch (kind_) {
        case Kind::Evens:
            return n % 2 == 0;
        case Kind::Odds:
            return n % 2 == 1;
        case Kind::Primes:
            return is_prime(n);
        case Kind::ExplicitList:
            return std::binary_search(values_.begin(), values_.end(), n);
        case Kind::Pseudorandom: {
            std::uint64_t mixed = (n * 2654435761ULL + seed_) & 0xFFFFFFFFULL;
            return std::popcount(mixed) % 2 == 1;
        }
    }
    throw std::logic_error("unreachable index-set kind");
}

std::string IndexSet::spec_fragment() const {
    switch (kind_) {
        case Kind::Evens:
            return "I=evens";
        case Kind::Odds:
            return "I=odds";
        case Kind::Primes:
            return "I=primes";
        case Kind::ExplicitList: {
            std::string out = "I=list&values=";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                out += std::to_string(values_[i]);
            }
            return out;
        }
        case Kind::Pseudorandom:
            return "I=pseudo&seed=" + std::to_string(seed_);
    }
    throw std::logic_error("unreachable index-set kind");
}

// ---------------------------------------------------------------- LengthSet

namespace {

LengthSet normalized(LengthSet set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

}  // namespace

LengthSet ls_shift(const LengthSet& set, std::uint64_t delta) {
    LengthSet out;
    out.reserve(set.size());
    for (std::uint64_t n : set) {
        out.push_back(n + delta);
    }
    return out;
}

LengthSet ls_sum(const LengthSet& a, const LengthSet& b) {
    LengthSet out;
    out.reserve(a.size() * b.size());
    for (std::uint64_t x : a) {
        for (std::uint64_t y : b) {
            out.push_back(x + y);
        }
    }
    return normalized(std::move(out));
}

LengthSet ls_union(const LengthSet& a, const LengthSet& b) {
    LengthSet out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool ls_subset(const LengthSet& inner, const LengthSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

LengthSet ls_quotient0(const LengthSet& set) {
    LengthSet out;
    out.reserve(set.size());
    for (std::uint64_t n : set) {
        if (n >= 1) {
            out.push_back(n - 1);
        }
    }
    return out;
}

LengthSet bset(int m, std::uint64_t j) {
    if (m < 0 || m > 2) {
        throw std::invalid_argument("bset level must be 0, 1, or 2");
    }
    if (j == 0) {
        throw std::invalid_argument("bset stage must be at least 1");
    }
    std::vector<LengthSet> memo(j + 1);
    switch (m) {
        case 0:
            memo[1] = {0};
            for (std::uint64_t i = 2; i <= j; ++i) {
                memo[i] = (i % 2 == 0) ? ls_sum(memo[i - 1], {1, 2}) : ls_shift(memo[i - 2], 3);
            }
            break;
        case 1:
            memo[1] = {0, 1};
            if (j >= 2) {
                memo[2] = {2};
            }
            for (std::uint64_t i = 3; i <= j; ++i) {
                memo[i] = (i % 2 == 0) ? ls_shift(memo[i - 2], 3) : ls_sum(memo[i - 1], {1, 2});
            }
            break;
        case 2:
            memo[1] = {0, 1};
            if (j >= 2) {
                memo[2] = {1, 2, 3};
            }
            for (std::uint64_t i = 3; i <= j; ++i) {
                memo[i] = ls_shift(memo[i - 1], (i % 2 == 0) ? 2 : 1);
            }
            break;
    }
    return memo[j];
}

LengthSet bcal(std::uint64_t j) { return bset(2, j); }

// ----------------------------------------------------- unary constructions

bool iprime_membership(const IndexSet& I, std::uint64_t n) {
    switch (n % 3) {
        case 0:
            return true;
        case 1:
            return I.contains(n / 3);
        default:
            return !I.contains(n / 3);
    }
}

DeltaInfo delta_info(const IndexSet& I, std::uint64_t n) {
    if (n < 3) {
        throw std::invalid_argument("the window set needs n >= 3");
    }
    DeltaInfo info;
    for (std::uint64_t k = n - 3; k < n; ++k) {
        if (iprime_membership(I, k)) {
            info.window.push_back(k);
        }
    }
    info.delta = info.window.size();
    return info;
}

std::uint64_t a_ext_len(const IndexSet& I, std::uint64_t n, std::uint64_t j) {
    if (j == 0) {
        throw std::invalid_argument("ordinals are 1-based: j must be at least 1");
    }
    std::uint64_t seen = 0;
    for (std::uint64_t k = n; k <= n + 3 * j + 3; ++k) {
        if (iprime_membership(I, k)) {
            ++seen;
            if (seen == j) {
                return k - n;
            }
        }
    }
    throw std::logic_error("extension scan exceeded its provable bound");
}

Word a_ext(const IndexSet& I, std::uint64_t n, std::uint64_t j) {
    std::uint64_t len = a_ext_len(I, n, j);
    return Word(Alphabet("0"),
                std::vector<std::uint8_t>(static_cast<std::size_t>(len), std::uint8_t{0}));
}

std::vector<std::uint64_t> gaps(const IndexSet& I, std::uint64_t bound) {
    std::vector<std::uint64_t> elements;
    for (std::uint64_t n = 0; n <= bound; ++n) {
        if (I.contains(n)) {
            elements.push_back(n);
        }
    }
    LengthSet out;
    for (std::size_t i = 1; i < elements.size(); ++i) {
        out.push_back(elements[i] - elements[i - 1]);
    }
    return normalized(std::move(out));
}

// ------------------------------------------------------- triangular layout

std::uint64_t triangular(std::uint64_t j) { return j * (j + 1) / 2; }

std::uint64_t triangular_inverse(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("triangular_inverse needs n >= 1");
    }
    std::uint64_t j = 1;
    while (triangular(j) < n) {
        ++j;
    }
    return j;
}

// ----------------------------------------------- the staircase language c51

namespace {

const Alphabet& binary_alphabet() {
    static const Alphabet alphabet("01");
    return alphabet;
}

const Alphabet& unary_alphabet() {
    static const Alphabet alphabet("0");
    return alphabet;
}

}  // namespace

Word c51_x(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("x_n needs n >= 1");
    }
    Word w(binary_alphabet());
    w.indices.assign(static_cast<std::size_t>(n), 0);
    w.indices.push_back(1);
    return w;
}

Word c51_y(std::uint64_t m, std::uint64_t k) { return concat(c51_x(m), c51_x(k)); }

std::vector<Word> c51_predicted_extensions(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("extension list needs n >= 1");
    }
    const std::uint64_t j = triangular_inverse(n);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(j));
    for (std::uint64_t m = 1; m < j; ++m) {
        out.push_back(c51_y(m, 1));
    }
    out.push_back(c51_y(j, n - triangular(j - 1)));
    return out;
}

std::vector<Word> c51_D(std::uint64_t j) {
    if (j == 0) {
        throw std::invalid_argument("prefix pool needs j >= 1");
    }
    std::set<Word, LenLexLess> pool;
    for (std::uint64_t r = 1; r <= j; ++r) {
        for (std::uint64_t s = 1; s <= j; ++s) {
            Word whole = c51_y(r, s);
            for (std::size_t len = 1; len < whole.indices.size(); ++len) {
                pool.insert(Word(whole.alphabet,
                                 std::vector<std::uint8_t>(whole.indices.begin(),
                                                           whole.indices.begin() +
                                                               static_cast<std::ptrdiff_t>(len))));
            }
        }
    }
    return std::vector<Word>(pool.begin(), pool.end());
}

namespace {

bool is_proper_prefix(const std::vector<std::uint8_t>& p, const std::vector<std::uint8_t>& w) {
    return p.size() < w.size() && std::equal(p.begin(), p.end(), w.begin());
}

}  // namespace

C51Class c51_classify(const Word& w) {
    if (w.alphabet != binary_alphabet()) {
        throw std::invalid_argument("classification is over the binary alphabet");
    }
    std::size_t n = 0;
    while (n < w.indices.size() && w.indices[n] == 0) {
        ++n;
    }
    if (n == w.indices.size()) {
        return C51Class::ZeroStar;
    }
    if (n == 0) {
        // Members need a leading zero block, so nothing extends past this.
        return C51Class::InZ;
    }
    // w = 0^n 1 v; every member with this start is x_n u for an extension u.
    const std::vector<std::uint8_t> v(w.indices.begin() + static_cast<std::ptrdiff_t>(n) + 1,
                                      w.indices.end());
    const std::vector<Word> extensions = c51_predicted_extensions(n);
    for (const Word& u : extensions) {
        if (v == u.indices) {
            return C51Class::InA;
        }
    }
    if (v.empty()) {
        return C51Class::InX;
    }
    for (const Word& u : extensions) {
        if (is_proper_prefix(v, u.indices)) {
            return C51Class::InY;
        }
    }
    return C51Class::InZ;
}

const char* to_string(C51Class c) {
    switch (c) {
        case C51Class::ZeroStar:
            return "ZeroStar";
        case C51Class::InA:
            return "InA";
        case C51Class::InX:
            return "InX";
        case C51Class::InY:
            return "InY";
        case C51Class::InZ:
            return "InZ";
    }
    throw std::logic_error("unreachable class");
}

Word kw_universal(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("the universal extension power needs n >= 1");
    }
    static const std::uint8_t block[5] = {1, 1, 0, 1, 0};
    Word w(binary_alphabet());
    w.indices.reserve(static_cast<std::size_t>(5 * n));
    for (std::uint64_t i = 0; i < n; ++i) {
        w.indices.insert(w.indices.end(), std::begin(block), std::end(block));
    }
    return w;
}

// ---------------------------------------------------------------- families

Alphabet family_alphabet(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Zeros:
        case FamilyTag::C41:
            return unary_alphabet();
        default:
            return binary_alphabet();
    }
}

namespace {

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::EqCount:
            return "eq-count";
        case FamilyTag::Palindrome:
            return "palindrome";
        case FamilyTag::Zeros:
            return "zeros";
        case FamilyTag::Xxry:
            return "xxry";
        case FamilyTag::Coprime:
            return "coprime";
        case FamilyTag::C41:
            return "c41";
        case FamilyTag::C51:
            return "c51";
        case FamilyTag::KamaeWeiss:
            return "kamae-weiss";
    }
    throw std::logic_error("unreachable family tag");
}

bool family_needs_index_set(FamilyTag tag) {
    return tag == FamilyTag::Zeros || tag == FamilyTag::C41;
}

void check_family_id(const FamilyId& id) {
    if (family_needs_index_set(id.tag) && !id.index_set) {
        throw std::invalid_argument(std::string("family ") + family_name(id.tag) +
                                    " requires an index set I");
    }
    if (!family_needs_index_set(id.tag) && id.index_set) {
        throw std::invalid_argument(std::string("family ") + family_name(id.tag) +
                                    " does not take an index set");
    }
}

bool eq_count_member(const std::vector<std::uint8_t>& w) {
    std::size_t zeros = 0;
    while (zeros < w.size() && w[zeros] == 0) {
        ++zeros;
    }
    for (std::size_t i = zeros; i < w.size(); ++i) {
        if (w[i] != 1) {
            return false;
        }
    }
    return w.size() == 2 * zeros;
}

bool palindrome_member(const std::vector<std::uint8_t>& w) {
    return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                      w.rbegin());
}

bool xxry_member(const std::vector<std::uint8_t>& w) {
    for (std::size_t half = 1; 2 * half < w.size(); ++half) {
        bool mirrored = true;
        for (std::size_t p = 0; p < half; ++p) {
            if (w[p] != w[2 * half - 1 - p]) {
                mirrored = false;
                break;
            }
        }
        if (mirrored) {
            return true;
        }
    }
    return false;
}

bool coprime_member(const std::vector<std::uint8_t>& w) {
    std::size_t zeros = 0;
    while (zeros < w.size() && w[zeros] == 0) {
        ++zeros;
    }
    const std::size_t ones = w.size() - zeros;
    for (std::size_t i = zeros; i < w.size(); ++i) {
        if (w[i] != 1) {
            return false;
        }
    }
    return zeros >= 1 && ones >= 1 && std::gcd(zeros, ones) == 1;
}

/// Splits w = 0^a 1 0^b 1 0^c 1 with a,b,c >= 1; empty result otherwise.
std::optional<std::array<std::uint64_t, 3>> three_block_split(
    const std::vector<std::uint8_t>& w) {
    std::array<std::uint64_t, 3> runs{};
    std::size_t block = 0;
    std::uint64_t run = 0;
    for (std::uint8_t symbol : w) {
        if (symbol == 0) {
            ++run;
        } else {
            if (block == 3 || run == 0) {
                return std::nullopt;
            }
            runs[block++] = run;
            run = 0;
        }
    }
    if (block != 3 || run != 0) {
        return std::nullopt;
    }
    return runs;
}

bool c51_member(const std::vector<std::uint8_t>& w) {
    auto runs = three_block_split(w);
    if (!runs) {
        return false;
    }
    const std::uint64_t n = (*runs)[0];
    const std::uint64_t m = (*runs)[1];
    const std::uint64_t k = (*runs)[2];
    const std::uint64_t j = triangular_inverse(n);
    if (m == j && k == n - triangular(j - 1)) {
        return true;
    }
    return k == 1 && m < j;
}

bool kw_member(const std::vector<std::uint8_t>& w) {
    const std::size_t len = w.size();
    for (std::size_t n = 1; 2 * n + 3 <= len; ++n) {
        const std::size_t s = len - (2 * n + 3);
        if (w[s] != 1 || w[s + 1] != 1 || w[s + 2 + n] != 1) {
            continue;
        }
        bool zeros_ok = true;
        for (std::size_t i = 0; i < n && zeros_ok; ++i) {
            zeros_ok = w[s + 2 + i] == 0 && w[s + 3 + n + i] == 0;
        }
        if (zeros_ok) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::string family_spec_string(const FamilyId& id) {
    check_family_id(id);
    std::string out = std::string("family:") + family_name(id.tag);
    if (id.index_set) {
        out += '?';
        out += id.index_set->spec_fragment();
    }
    return out;
}

bool family_membership(const FamilyId& id, const Word& w) {
    check_family_id(id);
    if (w.alphabet != family_alphabet(id.tag)) {
        throw std::invalid_argument("word alphabet does not match the family");
    }
    switch (id.tag) {
        case FamilyTag::EqCount:
            return eq_count_member(w.indices);
        case FamilyTag::Palindrome:
            return palindrome_member(w.indices);
        case FamilyTag::Zeros:
            return id.index_set->contains(w.indices.size());
        case FamilyTag::Xxry:
            return xxry_member(w.indices);
        case FamilyTag::Coprime:
            return coprime_member(w.indices);
        case FamilyTag::C41:
            return iprime_membership(*id.index_set, w.indices.size());
        case FamilyTag::C51:
            return c51_member(w.indices);
        case FamilyTag::KamaeWeiss:
            return kw_member(w.indices);
    }
    throw std::logic_error("unreachable family tag");
}

LanguageOracle family_oracle(const FamilyId& id) {
    check_family_id(id);
    LanguageOracle oracle{family_alphabet(id.tag), family_spec_string(id),
                          [id](const Word& w) { return family_membership(id, w); }};
    return oracle;
}

}  // namespace ordex
