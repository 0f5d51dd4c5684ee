#include "rigidity/pell.hpp"

#include <stdexcept>
#include <string>

namespace rigidity {

namespace {

void require_positive_count(int count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
}

[[noreturn]] void invariant_failure(const char* what, int k) {
    throw std::logic_error(std::string(what) + " violated at generation " + std::to_string(k));
}

// 3 p^2 - 6 n p + n(2n-1) == 0, the degeneracy equation cleared of the /3.
bool solves_degeneracy(const BigInt& n, const BigInt& p) {
    return 3 * p * p - 6 * n * p + n * (2 * n - 1) == 0;
}

}  // namespace

std::vector<PellSolution> pell_solutions(int count) {
    require_positive_count(count);
    std::vector<PellSolution> out;
    out.reserve(count);
    BigInt n = 3, r = 2;
    // (x, y) tracks the power (7 + 2 sqrt(12))^k as x + y sqrt(12)
    BigInt x = 7, y = 2;
    for (int k = 1; k <= count; ++k) {
        if ((2 * n + 1) * (2 * n + 1) - 12 * r * r != 1) invariant_failure("Pell equation", k);
        if (x != 2 * n + 1 || y != r) invariant_failure("fundamental-power form", k);
        out.push_back({k, n, r});
        BigInt n_next = 7 * n + 12 * r + 3;
        BigInt r_next = 4 * n + 7 * r + 2;
        n = n_next;
        r = r_next;
        // (x + y sqrt(12))(7 + 2 sqrt(12)) = (7x + 24y) + (2x + 7y) sqrt(12)
        BigInt x_next = 7 * x + 24 * y;
        BigInt y_next = 2 * x + 7 * y;
        x = x_next;
        y = y_next;
    }
    return out;
}

std::vector<DegeneracySolution> degeneracy_solutions(int count) {
    require_positive_count(count);
    std::vector<DegeneracySolution> out;
    out.reserve(count);
    BigInt n = 3, p = 1;
    for (int k = 1; k <= count; ++k) {
        if (!solves_degeneracy(n, p)) invariant_failure("degeneracy equation", k);
        const bool even = mpz_even_p(p.get_mpz_t()) != 0;
        if (even != (k % 2 == 0)) invariant_failure("parity alternation", k);
        out.push_back({k, n, p, even});
        BigInt n_next = 19 * n - 12 * p + 3;
        BigInt p_next = 8 * n - 5 * p + 1;
        n = n_next;
        p = p_next;
    }
    return out;
}

std::vector<ExceptionalPair> exceptional_pairs(int count) {
    require_positive_count(count);
    const std::vector<DegeneracySolution> all = degeneracy_solutions(2 * count);
    std::vector<ExceptionalPair> out;
    out.reserve(count);
    BigInt n = 48, p = 20;
    for (int k = 1; k <= count; ++k) {
        const DegeneracySolution& even_entry = all[2 * k - 1];
        if (n != even_entry.n_tilde || p != even_entry.p_tilde) {
            invariant_failure("even-index subsequence", k);
        }
        const BigInt mirror = 2 * n - p;
        if (mpz_even_p(p.get_mpz_t()) == 0) invariant_failure("even degree", k);
        if (!solves_degeneracy(n, p) || !solves_degeneracy(n, mirror)) {
            invariant_failure("degeneracy equation", k);
        }
        if (!(p < n && n < mirror)) invariant_failure("ordering p < n < 2n-p", k);
        out.push_back({k, n, p, mirror});
        BigInt n_next = 265 * n - 168 * p + 48;
        BigInt p_next = 112 * n - 71 * p + 20;
        n = n_next;
        p = p_next;
    }
    return out;
}

std::vector<std::pair<BigInt, BigInt>> brute_force_scan(const BigInt& n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    std::vector<std::pair<BigInt, BigInt>> out;
    BigInt square, root;
    for (BigInt n = 1; n <= n_max; ++n) {
        square = n * (n + 1);
        if (!mpz_divisible_ui_p(square.get_mpz_t(), 3)) continue;
        mpz_divexact_ui(square.get_mpz_t(), square.get_mpz_t(), 3);
        if (!is_perfect_square(square, &root)) continue;
        for (const BigInt& p : {BigInt(n - root), BigInt(n + root)}) {
            if (mpz_even_p(p.get_mpz_t()) && p >= 2 && p <= 2 * (n - 1)) {
                out.emplace_back(n, p);
            }
        }
    }
    return out;
}

DegreeClassification classify_degree(const BigInt& p) {
    if (p < 2 || !mpz_even_p(p.get_mpz_t())) {
        throw std::invalid_argument("classify_degree requires an even degree p >= 2");
    }
    DegreeClassification c;
    c.p = p;
    c.unresolved_dimensions.push_back(p / 2);

    // p_k grows strictly, so enumerate until p_k > p; the mirror 2n_k - p_k
    // only exceeds p_k, hence both alternatives are covered by the stop rule.
    BigInt n = 48, deg = 20;
    for (int k = 1; deg <= p; ++k) {
        if (deg == p || 2 * n - deg == p) {
            c.exceptional = true;
            c.generation = k;
            c.exceptional_dimension = n;
            c.unresolved_dimensions.push_back(n);
            break;
        }
        BigInt n_next = 265 * n - 168 * deg + 48;
        BigInt deg_next = 112 * n - 71 * deg + 20;
        n = n_next;
        deg = deg_next;
    }
    return c;
}

}  // namespace rigidity
