#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordex/alphabet.hpp"
#include "ordex/oracle.hpp"

namespace ordex {

bool is_prime(std::uint64_t n);

/// Decidable sets of naturals used as language parameters. Membership is
/// pure and total; the pseudorandom descriptor is a fixed formula (popcount
/// of (n * 2654435761 + seed) mod 2^32 is odd), not a stateful generator.
class IndexSet {
public:
    enum class Kind { Evens, Odds, Primes, ExplicitList, Pseudorandom };

    static IndexSet evens();
    static IndexSet odds();
    static IndexSet primes();
    /// Finite set; nothing beyond the last listed element is a member.
    static IndexSet explicit_list(std::vector<std::uint64_t> values);
    static IndexSet pseudorandom(std::uint64_t seed);

    Kind kind() const noexcept { return kind_; }
    bool contains(std::uint64_t n) const;

    /// Canonical query fragment: "I=evens", "I=odds", "I=primes",
    /// "I=list&values=1,4,5", "I=pseudo&seed=7".
    std::string spec_fragment() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    IndexSet(Kind kind, std::vector<std::uint64_t> values, std::uint64_t seed);

    Kind kind_;
    std::vector<std::uint64_t> values_;  // ExplicitList only; sorted, deduped
    std::uint64_t seed_;                 // Pseudorandom only
};

// ---------------------------------------------------------------- LengthSet
// Subsets of {0}* represented by their sorted, duplicate-free length sets;
// concatenation is elementwise addition, so large exponents stay cheap.

using LengthSet = std::vector<std::uint64_t>;

LengthSet ls_shift(const LengthSet& set, std::uint64_t delta);
LengthSet ls_sum(const LengthSet& a, const LengthSet& b);
LengthSet ls_union(const LengthSet& a, const LengthSet& b);
bool ls_subset(const LengthSet& inner, const LengthSet& outer);
/// Right quotient by a single 0: {n : n+1 in set}.
LengthSet ls_quotient0(const LengthSet& set);

/// The recursively defined sets B_m^j (m in {0,1,2}, j >= 1), as length sets.
LengthSet bset(int m, std::uint64_t j);
/// B^(j) = B_2^j.
LengthSet bcal(std::uint64_t j);

// ------------------------------------------------------- unary constructions

/// Membership in I' = {3i} ∪ {3i+1 : i in I} ∪ {3i+2 : i not in I}.
bool iprime_membership(const IndexSet& I, std::uint64_t n);

struct DeltaInfo {
    std::vector<std::uint64_t> window;  // Δ(n) = {k in I' : n-3 <= k < n}
    std::uint64_t delta = 0;            // δ(n) = |Δ(n)|, always in {1,2,3}
};

/// Requires n >= 3 (std::invalid_argument otherwise).
DeltaInfo delta_info(const IndexSet& I, std::uint64_t n);

/// Length of the j-th extension of 0^n inside {0^k : k in I'}: scans k = n,
/// n+1, ... for I' membership. The scan is provably complete by k = n+3j+3
/// (every third natural is in I'); exceeding it raises std::logic_error.
std::uint64_t a_ext_len(const IndexSet& I, std::uint64_t n, std::uint64_t j);
/// Same extension as a unary word.
Word a_ext(const IndexSet& I, std::uint64_t n, std::uint64_t j);

/// Sorted distinct successor gaps {succ(n) - n : n in I, succ(n) <= bound}.
std::vector<std::uint64_t> gaps(const IndexSet& I, std::uint64_t bound);

// --------------------------------------------------------- triangular layout

std::uint64_t triangular(std::uint64_t j);  // j(j+1)/2
/// The unique j with t(j-1) < n <= t(j); requires n >= 1.
std::uint64_t triangular_inverse(std::uint64_t n);

// ------------------------------------------------- the staircase language c51

/// x_n = 0^n 1 (n >= 1).
Word c51_x(std::uint64_t n);
/// y(m,k) = x_m x_k (m,k >= 1).
Word c51_y(std::uint64_t m, std::uint64_t k);

/// The full extension list of x_n, in order:
/// y(1,1), ..., y(j-1,1), y(j, n - t(j-1)) with j = t^{-1}(n).
std::vector<Word> c51_predicted_extensions(std::uint64_t n);

/// All nonempty proper prefixes of the words y(r,s) with r,s <= j,
/// in length-lex order.
std::vector<Word> c51_D(std::uint64_t j);

/// Partition cell of a binary word relative to c51: all-zeros words, members,
/// the x_n themselves, strict extendable intermediates, dead prefixes.
/// Overlaps resolve by the priority ZeroStar > InA > InX > InY > InZ.
enum class C51Class { ZeroStar, InA, InX, InY, InZ };
C51Class c51_classify(const Word& w);
const char* to_string(C51Class c);

/// (11010)^n, n >= 1.
Word kw_universal(std::uint64_t n);

// ------------------------------------------------------------------ families

enum class FamilyTag { EqCount, Palindrome, Zeros, Xxry, Coprime, C41, C51, KamaeWeiss };

struct FamilyId {
    FamilyTag tag;
    std::optional<IndexSet> index_set;  // required for Zeros and C41
};

/// {0,1} for most families; {0} for zeros and c41.
Alphabet family_alphabet(FamilyTag tag);

/// Canonical spec text, e.g. "family:zeros?I=primes".
std::string family_spec_string(const FamilyId& id);

/// Exact membership per the family definition. Throws std::invalid_argument
/// on alphabet mismatch or a missing/superfluous index set.
bool family_membership(const FamilyId& id, const Word& w);

LanguageOracle family_oracle(const FamilyId& id);

}  // namespace ordex
