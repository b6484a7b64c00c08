#include "pz/pzfield.hpp"

namespace pz {

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::F1: return "F1";
        case FamilyTag::F2: return "F2";
        case FamilyTag::F3: return "F3";
        case FamilyTag::F4: return "F4";
        case FamilyTag::F5: return "F5";
        case FamilyTag::F6: return "F6";
        case FamilyTag::F7: return "F7";
        case FamilyTag::NonPolynomial: return "NonPolynomial";
    }
    return "?";
}

GeneralizedSystem build_field(const PZParams& prm) {
    const Rational &a = prm.a, &b = prm.b, &c = prm.c, &m = prm.m, &k = prm.k;
    GeneralizedSystem sys;
    sys.add({a * (2 * m + k), m + k - 1, 1});
    sys.add({b * (2 * m - k), m - k - 1, 1});
    sys.add({-a * a * m, 2 * m + 2 * k - 1, 0});
    sys.add({-c, 2 * m - 1, 0});
    sys.add({-b * b * m, 2 * m - 2 * k - 1, 0});
    return sys;
}

namespace {

bool nonneg_int(const Rational& r, long& out) {
    if (!is_integer(r) || r < 0) return false;
    out = to_long(r);
    return true;
}

}  // namespace

FamilyClass classify_family(const PZParams& prm) {
    const Rational &a = prm.a, &b = prm.b, &c = prm.c, &m = prm.m, &k = prm.k;
    FamilyClass cls;
    cls.params = prm;
    long s = 0, p = 0, r = 0;

    const bool az = (a == 0), bz = (b == 0), cz = (c == 0);
    if (az && bz && cz) {
        // trivially polynomial (ydot = 0); mapped to a degenerate F4
        cls.tag = FamilyTag::F4;
        cls.r = nonneg_int(2 * m - 1, r) ? std::optional<long>(r) : std::optional<long>(0);
        cls.degenerate = true;
        return cls;
    }
    if (!az && !bz && !cz) {  // Case 1
        if (nonneg_int(m + k - 1, s) && nonneg_int(m - k - 1, p)) {
            cls.tag = FamilyTag::F1;
            cls.s = s;
            cls.p = p;
            cls.r = s + p + 1;
        }
        return cls;
    }
    if (az && !bz && !cz) {  // Case 2
        if (nonneg_int(m - k - 1, p) && nonneg_int(2 * m - 1, r)) {
            cls.tag = FamilyTag::F2;
            cls.p = p;
            cls.r = r;
        }
        return cls;
    }
    if (!az && !bz && cz) {  // Case 3
        if (nonneg_int(m + k - 1, s) && nonneg_int(m - k - 1, p)) {
            cls.tag = FamilyTag::F3;
            cls.s = s;
            cls.p = p;
        }
        return cls;
    }
    if (az && bz && !cz) {  // Case 4
        if (nonneg_int(2 * m - 1, r)) {
            cls.tag = FamilyTag::F4;
            cls.r = r;
        }
        return cls;
    }
    if (!az && bz && !cz) {  // Case 5
        if (nonneg_int(m + k - 1, s) && nonneg_int(2 * m - 1, r)) {
            cls.tag = FamilyTag::F5;
            cls.s = s;
            cls.r = r;
        }
        return cls;
    }
    if (az && !bz && cz) {  // Case 6
        if (nonneg_int(m - k - 1, p)) {
            cls.tag = FamilyTag::F6;
            cls.p = p;
        }
        return cls;
    }
    // Case 7: a != 0, b = 0, c = 0
    if (nonneg_int(m + k - 1, s)) {
        cls.tag = FamilyTag::F7;
        cls.s = s;
    }
    return cls;
}

GeneralizedSystem instantiate_family(const FamilyClass& cls) {
    if (cls.tag == FamilyTag::NonPolynomial) throw NotPolynomial();
    const Rational &a = cls.params.a, &b = cls.params.b, &c = cls.params.c;
    GeneralizedSystem sys;
    auto half = [](long n) { return Rational(n, 2); };

    switch (cls.tag) {
        case FamilyTag::F1: {
            long s = *cls.s, p = *cls.p;
            sys.add({a * half(3 * s + p + 4), Rational(s), 1});
            sys.add({b * half(s + 3 * p + 4), Rational(p), 1});
            sys.add({-a * a * half(s + p + 2), Rational(2 * s + 1), 0});
            sys.add({-c, Rational(s + p + 1), 0});
            sys.add({-b * b * half(s + p + 2), Rational(2 * p + 1), 0});
            break;
        }
        case FamilyTag::F2: {
            long p = *cls.p, r = *cls.r;
            sys.add({b * half(r + 2 * p + 3), Rational(p), 1});
            sys.add({-c, Rational(r), 0});
            sys.add({-b * b * half(r + 1), Rational(2 * p + 1), 0});
            break;
        }
        case FamilyTag::F3: {
            long s = *cls.s, p = *cls.p;
            sys.add({a * half(3 * s + p + 4), Rational(s), 1});
            sys.add({b * half(s + 3 * p + 4), Rational(p), 1});
            sys.add({-a * a * half(s + p + 2), Rational(2 * s + 1), 0});
            sys.add({-b * b * half(s + p + 2), Rational(2 * p + 1), 0});
            break;
        }
        case FamilyTag::F4: {
            sys.add({-c, Rational(*cls.r), 0});
            break;
        }
        case FamilyTag::F5: {
            // m = (r+1)/2, k = (2s-r+1)/2, so the y-coefficient a(2m+k)
            // is a(2s+r+3)/2 rather than the display's a(3s+p+4)/2
            long s = *cls.s, r = *cls.r;
            sys.add({a * half(2 * s + r + 3), Rational(s), 1});
            sys.add({-a * a * half(r + 1), Rational(2 * s + 1), 0});
            sys.add({-c, Rational(r), 0});
            break;
        }
        case FamilyTag::F6: {
            long p = *cls.p;
            const Rational& m = cls.params.m;
            sys.add({b * (m + p + 1), Rational(p), 1});
            sys.add({-b * b * m, Rational(2 * p + 1), 0});
            break;
        }
        case FamilyTag::F7: {
            long s = *cls.s;
            const Rational& m = cls.params.m;
            sys.add({a * (m + s + 1), Rational(s), 1});
            sys.add({-a * a * m, Rational(2 * s + 1), 0});
            break;
        }
        case FamilyTag::NonPolynomial:
            break;
    }
    return sys;
}

}  // namespace pz
