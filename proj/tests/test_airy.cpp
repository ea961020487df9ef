#include <catch2/catch_amalgamated.hpp>

#include "sixv/airy.hpp"

using sixv::BigFloat;
using C = sixv::Cx<double>;

namespace {

// 20 reference values computed independently at 40-digit precision.
struct AiryRef { double re, im; double ai_re, ai_im, aip_re, aip_im; };
constexpr AiryRef kAiryRefs[] = {
    {0.3, 0.0, 0.2788064819550049246637, 0.0, -0.2451463642190548043662, 0.0},
    {1.0, 0.0, 0.1352924163128814155241, 0.0, -0.1591474412967932127875, 0.0},
    {4.5, 0.0, 0.0003302503235143089836587, 0.0, -0.0007178665675575088886936, 0.0},
    {8.0, 0.0, 4.692207616099231625649e-8, 0.0, -1.341439297906786574291e-7, 0.0},
    {15.0, 0.0, 2.164962520737992298989e-18, 0.0, -8.420567954017772766124e-18, 0.0},
    {25.0, 0.0, 8.116026824691386683758e-38, 0.0, -4.066089337243281005323e-37, 0.0},
    {-1.2, 0.0, 0.5261943748021200786160, 0.0, 0.1070315692722807656496, 0.0},
    {-6.0, 0.0, -0.3291451736298231052314, 0.0, 0.3459354872813428949298, 0.0},
    {-14.0, 0.0, -0.2659834827840777983848, 0.0, 0.4430248770028436411715, 0.0},
    {-27.5, 0.0, 0.1102330052599805234008, 0.0, 1.156457597666485588202, 0.0},
    {2.0, 3.0, 0.008104457809530534989030, 0.1311783826045660268826, 0.09665817903311290473549, -0.2319871853854863203669},
    {-3.0, 4.0, 207.7347151607831215198, 204.6056300243968803266, 199.6016099267646540673, -604.6784762452648661509},
    {5.0, -5.0, 0.0009988350779710246165193, -0.001015824213839636475307, -0.001469789555520666087077, 0.003513901717553313456747},
    {-8.0, -6.0, 1978790.306666523598646, 4983873.893511908714873, -16815038.79990765369613, 1025046.256348521691801},
    {0.5, -0.5, 0.2161863447781259881999, 0.1148306398776481324805, -0.2387168090817686158683, -0.06615704122109355452309},
    {10.0, 10.0, 6.649912979675095758572e-9, -1.860283363786204013966e-7, -2.886152024800450845835e-7, 6.391773730673568836669e-7},
    {-12.0, 18.0, 1.219294316627117522940e+28, -4.488769141302051446773e+27, -4.504516001304683458949e+28, -4.006056780815130841902e+28},
    {20.0, -7.0, 2.508028791512478432580e-26, 3.252368765906708699361e-27, -1.165920134984962523924e-25, 4.450744157443453712449e-27},
    {-2.5, -21.0, 1.668178506487149785442e+22, -4416429421465031513359., -3.578159430413556564986e+22, 7.064522184003465938145e+22},
    {28.0, 9.0, -4.895885551958382662394e-43, 4.826668119000085127220e-43, 3.031191624495784981424e-42, -2.179954802580042670177e-42},
};

double rel_err(const C& got, double wr, double wi) {
    double scale = std::max(std::hypot(wr, wi), 1e-300);
    return std::hypot(got.re - wr, got.im - wi) / scale;
}

}  // namespace

TEST_CASE("Airy matches 20 frozen high-precision reference values") {
    for (const auto& r : kAiryRefs) {
        auto v = sixv::airy({r.re, r.im});
        CAPTURE(r.re, r.im);
        CHECK(rel_err(v.ai, r.ai_re, r.ai_im) < 1e-12);
        CHECK(rel_err(v.aip, r.aip_re, r.aip_im) < 1e-12);
    }
}

TEST_CASE("Airy double path agrees with padded-precision series on a grid") {
    for (double rad : {0.7, 3.0, 8.5, 9.5, 14.0, 22.0, 30.0}) {
        for (int j = 0; j < 12; ++j) {
            double th = -M_PI + (2 * M_PI) * (j + 0.5) / 12;
            C z{rad * std::cos(th), rad * std::sin(th)};
            auto ref = sixv::airy_reference(z, 128);
            auto got = sixv::airy(z);
            CAPTURE(rad, th);
            CHECK(rel_err(got.ai, static_cast<double>(ref.ai.re),
                          static_cast<double>(ref.ai.im)) < 1e-12);
            CHECK(rel_err(got.aip, static_cast<double>(ref.aip.re),
                          static_cast<double>(ref.aip.im)) < 1e-12);
        }
    }
}

TEST_CASE("connection identity annihilates Ai across evaluation branches") {
    const C wp{-0.5, std::sqrt(3.0) / 2}, wm{-0.5, -std::sqrt(3.0) / 2};
    for (C z : {C{1.5, 0.3}, C{-2.0, 1.0}, C{4.0, -2.0}, C{7.0, 1.0}}) {
        auto a0 = sixv::airy(z);
        auto a1 = sixv::airy(z * wp);
        auto a2 = sixv::airy(z * wm);
        C s = a0.ai + wp * a1.ai + wm * a2.ai;
        double scale = std::max({abs(a0.ai), abs(a1.ai), abs(a2.ai)});
        CHECK(abs(s) / scale < 1e-13);
    }
}
