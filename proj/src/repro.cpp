#include "betti/repro.hpp"

#include <exception>
#include <utility>

#include "betti/lexbound.hpp"
#include "betti/predictor.hpp"

namespace betti {

namespace {

using Mod = GradedFreeModule;

// modules F_1, F_2, ... with F_0 = R implied
ResolutionShape lit(std::vector<Mod> mods) {
    ResolutionShape r;
    r.modules.push_back(Mod{{0, 1}});
    for (auto& m : mods) r.modules.push_back(std::move(m));
    return r;
}

HilbertFunction hf(std::vector<Int> v) { return HilbertFunction(std::move(v)); }

// h_{A/LA} under the weak Lefschetz property
HilbertFunction wlp_quotient(const HilbertFunction& h) {
    std::vector<Int> v;
    for (Int x : first_difference(h)) {
        if (x <= 0) break;
        v.push_back(x);
    }
    return HilbertFunction(v);
}

struct Runner {
    std::vector<ReproCheck> out;

    template <class T, class F>
    void check(const std::string& name, const T& expected, F&& compute) {
        ReproCheck c;
        c.name = name;
        c.expected = expected.str();
        try {
            const T actual = compute();
            c.actual = actual.str();
            c.ok = actual == expected;
        } catch (const std::exception& e) {
            c.actual = std::string("error: ") + e.what();
        }
        out.push_back(std::move(c));
    }
};

struct IntBox {
    Int v;
    std::string str() const { return std::to_string(v); }
    bool operator==(const IntBox&) const = default;
};

}  // namespace

std::vector<ReproCheck> run_repro() {
    Runner r;

    const DegreeTuple e37(4, {5, 5, 5, 5, 10});
    r.check("Ex3.7 h(R/G)", hf({1, 4, 10, 20, 10, 4, 1}), [&] { return linked_gorenstein_hilbert(e37); });
    r.check("Ex3.7 R/I", lit({{{5, 4}, {10, 1}}, {{10, 6}, {14, 25}}, {{15, 52}}, {{16, 25}}}),
            [&] { return predict(e37).shape; });

    const DegreeTuple e38(4, {3, 5, 5, 5, 10});
    r.check("Ex3.8 unsplit cone",
            lit({{{3, 1}, {5, 3}, {10, 1}}, {{10, 3}, {8, 3}, {13, 16}}, {{15, 1}, {13, 3}, {14, 30}}, {{15, 16}}}),
            [&] { return mapping_cone_aci(gor_one_peak(4, 2, e38), e38); });
    r.check("Ex3.8 R/I", lit({{{3, 1}, {5, 3}, {10, 1}}, {{10, 3}, {8, 3}, {13, 16}}, {{13, 3}, {14, 30}}, {{15, 15}}}),
            [&] { return predict(e38).shape; });

    const DegreeTuple pre(4, {4, 4, 4, 4, 5});
    r.check("two-peak example h(R/G)", hf({1, 4, 10, 20, 20, 10, 4, 1}), [&] { return linked_gorenstein_hilbert(pre); });
    r.check("two-peak example maximal R/G",
            lit({{{4, 15}, {5, 10}}, {{5, 24}, {6, 24}}, {{6, 10}, {7, 15}}, {{11, 1}}}),
            [&] { return to_shape(gor_betti_bound(linked_gorenstein_hilbert(pre), 4)); });
    r.check("two-peak example generic R/G", lit({{{4, 15}}, {{5, 14}, {6, 14}}, {{7, 15}}, {{11, 1}}}),
            [&] { return gor_two_peaks_even(4, 4); });

    for (int ell = 1; ell <= 8; ++ell) {
        const Int a = binom(ell + 3, 2);
        r.check("Ex3.11 a, l=" + std::to_string(ell), IntBox{a},
                [&] { return IntBox{two_peaks_alpha(4, ell + 1, 1)}; });
        r.check("Ex3.11 b, l=" + std::to_string(ell), IntBox{a - 1},
                [&] { return IntBox{two_peaks_alpha(4, ell + 1, 2)}; });
    }
    // l = 2, three generators of degree l+1 split off at the end
    r.check("Ex3.11 (3,3,3,4,4)",
            lit({{{3, 3}, {4, 2}}, {{6, 3}, {7, 13}}, {{8, 9}, {9, 10}}, {{10, 7}}}),
            [&] { return predict(DegreeTuple(4, {3, 3, 3, 4, 4})).shape; });
    // l = 1, rule a twice and rule b once
    r.check("Ex3.11 (2,2,3,3,3)",
            lit({{{2, 2}, {3, 3}}, {{4, 1}, {5, 10}}, {{6, 4}, {7, 7}}, {{8, 4}}}),
            [&] { return predict(DegreeTuple(4, {2, 2, 3, 3, 3})).shape; });

    r.check("Prop4.1 Case I (2,3,5,5)", lit({{{2, 5}}, {{3, 5}}, {{5, 1}}}),
            [&] { return gor_n3_generic(DegreeTuple(3, {2, 3, 5, 5})); });
    r.check("Prop4.1 Case II (4,4,4,4)", lit({{{3, 4}, {4, 1}}, {{5, 4}, {4, 1}}, {{8, 1}}}),
            [&] { return gor_n3_generic(DegreeTuple(3, {4, 4, 4, 4})); });
    r.check("Prop4.1 Case II (3,3,3,3)", lit({{{2, 3}}, {{4, 3}}, {{6, 1}}}),
            [&] { return gor_n3_generic(DegreeTuple(3, {3, 3, 3, 3})); });
    r.check("Prop4.1 Case III (2,5,5,5)", lit({{{2, 1}, {3, 4}}, {{5, 1}, {4, 4}}, {{7, 1}}}),
            [&] { return gor_n3_generic(DegreeTuple(3, {2, 5, 5, 5})); });
    r.check("Prop4.1 Case IV (2,6,6,6)", lit({{{2, 1}, {3, 2}}, {{6, 1}, {5, 2}}, {{8, 1}}}),
            [&] { return gor_n3_generic(DegreeTuple(3, {2, 6, 6, 6})); });
    r.check("Prop4.1 Case IV (3,7,7,7)", lit({{{3, 1}, {4, 3}, {5, 1}}, {{7, 1}, {6, 3}, {5, 1}}, {{10, 1}}}),
            [&] { return gor_n3_generic(DegreeTuple(3, {3, 7, 7, 7})); });

    const DegreeTuple e44(3, {4, 4, 4, 8});
    r.check("Ex4.4 h(R/I)", hf({1, 3, 6, 10, 12, 12, 10, 6, 2}), [&] { return aci_hilbert(e44); });
    r.check("Ex4.4 R/I", lit({{{4, 3}, {8, 1}}, {{8, 3}, {9, 2}, {10, 1}}, {{10, 1}, {11, 2}}}),
            [&] { return predict(e44).shape; });

    for (int a = 2; a <= 6; ++a) {
        const ResolutionShape want = lit({{{a, 4}}, {{2 * a, 3}, {2 * a - 1, a}}, {{2 * a + 1, a}}});
        r.check("Cor4.3 a=" + std::to_string(a), want, [&] { return aci_n3_equal(a).shape; });
        r.check("Cor4.3 predict a=" + std::to_string(a), want,
                [&] { return predict(DegreeTuple(3, {a, a, a, a})).shape; });
    }

    const DegreeTuple e51(4, {4, 4, 4, 4, 4});
    const HilbertFunction h51 = hf({1, 4, 10, 20, 31, 20, 10, 4, 1});
    r.check("Ex5.1 h(R/G)", h51, [&] { return linked_gorenstein_hilbert(e51); });
    r.check("Ex5.1 h(A/LA)", hf({1, 3, 6, 10, 11}), [&] { return wlp_quotient(linked_gorenstein_hilbert(e51)); });
    r.check("Ex5.1 A/LA", lit({{{4, 4}, {5, 9}}, {{6, 23}}, {{7, 11}}}), [&] { return ala_samedeg(4, 4); });
    r.check("Ex5.1 R/G", lit({{{4, 4}, {5, 20}}, {{6, 46}}, {{7, 20}, {8, 4}}, {{12, 1}}}),
            [&] { return gor_samedeg(4, 4).shape; });
    r.check("Ex5.1 R/I", lit({{{4, 5}}, {{8, 10}, {9, 20}}, {{10, 46}}, {{11, 20}}}),
            [&] { return predict(e51).shape; });

    const DegreeTuple e52(4, {5, 5, 5, 5, 5});
    r.check("Ex5.2 h(R/G)", hf({1, 4, 10, 20, 35, 52, 52, 35, 20, 10, 4, 1}),
            [&] { return linked_gorenstein_hilbert(e52); });
    r.check("Ex5.2 h(A/LA)", hf({1, 3, 6, 10, 15, 17}), [&] { return wlp_quotient(linked_gorenstein_hilbert(e52)); });
    r.check("Ex5.2 A/LA", lit({{{5, 4}, {6, 16}}, {{7, 36}}, {{8, 17}}}), [&] { return ala_samedeg(4, 5); });
    r.check("Ex5.2 y range", IntBox{17}, [&] {
        const Prediction p = gor_samedeg(4, 5);
        return IntBox{p.families.size() == 1 && p.families[0].lo == 0 ? p.families[0].hi : -1};
    });
    for (Int y = 0; y <= 17; ++y) {
        const std::string ys = " y=" + std::to_string(y);
        r.check("Ex5.2 R/G" + ys,
                lit({{{5, 4}, {6, 16}, {7, y}}, {{7, 19 + y}, {8, 19 + y}}, {{8, y}, {9, 16}, {10, 4}}, {{15, 1}}}),
                [&] { return gor_samedeg(4, 5).instantiate({y}); });
        r.check("Ex5.2 R/I" + ys,
                lit({{{5, 5}}, {{10, 10}, {11, 16}, {12, y}}, {{13, 19 + y}, {12, 19 + y}}, {{14, 16}, {13, y}}}),
                [&] { return predict(e52).instantiate({y}); });
    }

    const DegreeTuple e57(4, {3, 3, 4, 6, 6});
    r.check("Ex5.7 R/G", lit({{{3, 2}, {4, 17}}, {{5, 36}}, {{6, 17}, {7, 2}}, {{10, 1}}}),
            [&] { return gor_n4_even(e57); });
    r.check("Ex5.7 R/I",
            lit({{{3, 2}, {4, 1}, {6, 2}}, {{6, 1}, {7, 2}, {9, 4}, {10, 18}}, {{10, 1}, {11, 36}}, {{12, 16}}}),
            [&] { return predict(e57).shape; });
    return r.out;
}

}  // namespace betti
