// Acceptance suite: runs every criterion and prints one PASS/FAIL line per
// criterion.  Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "onesided/abelian.hpp"
#include "onesided/curve_system.hpp"
#include "onesided/formats.hpp"
#include "onesided/genus.hpp"
#include "onesided/plat.hpp"
#include "onesided/splittings.hpp"
#include "word_gen.hpp"

using namespace onesided;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail = "") {
    auto& os = pass ? std::cout : std::cerr;
    os << (pass ? "PASS" : "FAIL") << " " << index << ": " << name;
    if (!detail.empty()) os << " — " << detail;
    os << "\n";
    if (!pass) ++failures;
}

template <class F>
void criterion(int index, const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        detail = body();
        pass = true;
    } catch (const std::exception& e) {
        detail = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report(index, name, pass, detail + " [" + std::to_string(ms) + " ms]");
}

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw check_failure(msg);
}

}  // namespace

int main() {
    // 1. Genus formula vs exhaustive chord-diagram oracle, all even p <= 24.
    criterion(1, "formula N(p,q) equals p/2 + 1 - max c(tau) for even p <= 24", [] {
        int checked = 0;
        for (int p = 2; p <= 24; p += 2)
            for (int q = 1; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                Int formula = minimal_genus_formula(p, q);
                MaxCyclesResult search = max_cycles(p / 2, q);
                expect(formula == p / 2 + 1 - search.c_max,
                       "disagreement at L(" + std::to_string(p) + "," + std::to_string(q) + ")");
                ++checked;
            }
        return std::to_string(checked) + " (p,q) pairs, exact agreement";
    });

    // 2. Adjacent-pair family, q = 1.
    criterion(2, "adjacent pairs give c=1 and genus k, and c_max(k,1)=1, k=1..8", [] {
        for (int k = 1; k <= 8; ++k) {
            TauInvolution tau = adjacent_pair_tau(k);
            CycleDecomposition dec = cycle_decomposition(tau, 1);
            expect(dec.count() == 1, "c != 1 at k=" + std::to_string(k));
            expect(genus_of_tau(tau, 1) == k, "genus != k at k=" + std::to_string(k));
            expect(max_cycles(k, 1).c_max == 1, "c_max != 1 at k=" + std::to_string(k));
        }
        return std::string("k = 1..8 exact");
    });

    // 3. Long-chord family, p = 4a+4, q = 2a+1.
    criterion(3, "long-chord tau: non-crossing, c=2a+1, genus 2, lengths {8, 4 x 2a}, a=1..5", [] {
        for (int a = 1; a <= 5; ++a) {
            TauInvolution tau = long_chord_tau(a);
            validate_tau(tau.pairs, tau.k);  // non-crossing
            CycleDecomposition dec = cycle_decomposition(tau, 2 * a + 1);
            expect(dec.count() == 2 * a + 1, "c != 2a+1 at a=" + std::to_string(a));
            expect(genus_of_tau(tau, 2 * a + 1) == 2, "genus != 2 at a=" + std::to_string(a));
            std::vector<int> lens = dec.lengths();
            std::sort(lens.begin(), lens.end());
            std::vector<int> want(2 * a, 4);
            want.push_back(8);
            expect(lens == want, "cycle lengths mismatch at a=" + std::to_string(a));
        }
        return std::string("a = 1..5 exact");
    });

    // 4. Klein-bottle mapping-cylinder gluing homology.
    criterion(4, "H1 of the [[0,1],[1,0]] gluing is Z + Z/2 + Z/2", [] {
        AbelianGroup h1 = h1_from_klein_gluing(GluingMatrix{0, 1, 1, 0});
        expect(h1.rank == 1 && h1.torsion == std::vector<Int>{2, 2},
               "got " + h1.to_string());
        return h1.to_string();
    });

    // 5. Smith normal form certificates on random matrices.
    criterion(5, "1000 random SNF certificates (<= 6x6, entries in [-20,20])", [] {
        std::mt19937 rng(8128);
        std::uniform_int_distribution<int> dim(1, 6), entry(-20, 20);
        for (int trial = 0; trial < 1000; ++trial) {
            IntMatrix a(dim(rng), dim(rng));
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
            SmithResult r = smith_normal_form(a);
            expect(r.u * a * r.v == r.d, "U*A*V != D");
            Int du = determinant(r.u), dv = determinant(r.v);
            expect(du == 1 || du == -1, "U not unimodular");
            expect(dv == 1 || dv == -1, "V not unimodular");
            std::vector<Int> f = r.invariant_factors();
            for (std::size_t i = 0; i + 1 < f.size(); ++i)
                expect(f[i + 1] % f[i] == 0, "invariant factor chain broken");
        }
        return std::string("1000 matrices certified");
    });

    // 6. Catalan counts.
    criterion(6, "enumeration counts match the Catalan recurrence for k <= 10", [] {
        std::vector<long long> c(11, 0);
        c[0] = 1;
        for (int m = 1; m <= 10; ++m)
            for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
        for (int k = 1; k <= 10; ++k) {
            long long n = 0;
            for_each_tau(k, [&](const std::vector<int>&) { ++n; });
            expect(n == c[k], "count mismatch at k=" + std::to_string(k));
        }
        expect(c[3] == 5 && c[10] == 16796, "recurrence sanity");
        return std::string("k = 1..10, C_10 = 16796");
    });

    // 7. Plat normalization property suite.
    criterion(7, "500 random closed words (<= 40 events, genus <= 3) normalize in shape", [] {
        std::mt19937 rng(31415926);
        for (int trial = 0; trial < 500; ++trial) {
            int genus = trial % 4;
            MorseWord w = testgen::random_closed_word(rng, genus, 34);
            expect(w.events.size() <= 40, "generator exceeded 40 events");
            TraceResult before = trace(w);
            PlatPresentation p = normalize(w);  // throws on budget exhaustion
            for (const Event& e : p.braid)
                expect(e.kind == EventKind::Sigma || e.kind == EventKind::Handle,
                       "interior critical event survived");
            expect(static_cast<int>(p.bottom.size()) * 2 == p.n &&
                       static_cast<int>(p.top.size()) * 2 == p.n,
                   "matchings not perfect");
            expect(plat_components(p) == before.component_count,
                   "component count not preserved at trial " + std::to_string(trial));
        }
        return std::string("500 words, conservation exact");
    });

    // 8. Splitting descriptor formulas.
    criterion(8, "bundle genus 2g+4 / 2g+3 for g=0..10; lens handlebody genera", [] {
        for (int g = 0; g <= 10; ++g) {
            SplittingDescriptor d = trivial_bundle_splitting(g);
            expect(d.u_genus == 2 * g + 4, "u_genus != 2g+4 at g=" + std::to_string(g));
            expect(d.handlebody_genus == 2 * g + 3,
                   "handlebody_genus != 2g+3 at g=" + std::to_string(g));
        }
        expect(lens_splitting(8, 3).handlebody_genus == 1, "L(8,3) handlebody genus != 1");
        for (int k = 1; k <= 8; ++k)
            expect(lens_splitting(2 * k, 1).handlebody_genus == k - 1,
                   "L(2k,1) handlebody genus != k-1 at k=" + std::to_string(k));
        return std::string("g = 0..10 and lens families exact");
    });

    if (failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cerr << failures << " acceptance criteria FAILED\n";
    return failures;
}
