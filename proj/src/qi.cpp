#include "jt/qi.hpp"

#include <cctype>

namespace jt {

QiScalar QiScalar::frac(long num, long den, long inum, long iden) {
    if (den == 0 || iden == 0) throw DomainError("zero divisor");
    return QiScalar(mpq_class(num, den), mpq_class(inum, iden));
}

QiScalar& QiScalar::operator*=(const QiScalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

QiScalar QiScalar::inverse() const {
    if (is_zero()) throw DomainError("zero divisor");
    if (sgn(im_) == 0) return QiScalar(1 / re_);
    mpq_class n = norm();
    return QiScalar(re_ / n, -im_ / n);
}

QiScalar pow(QiScalar base, long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    QiScalar out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::string to_string(const QiScalar& x) {
    const bool has_re = sgn(x.re()) != 0;
    const bool has_im = sgn(x.im()) != 0;
    if (!has_im) return x.re().get_str();
    std::string out;
    if (has_re) out = x.re().get_str();
    if (x.im() == 1) {
        out += has_re ? "+i" : "i";
    } else if (x.im() == -1) {
        out += "-i";
    } else {
        if (has_re && sgn(x.im()) > 0) out += '+';
        out += x.im().get_str();
        out += "*i";
    }
    return out;
}

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole) {
    auto fail = [&] { return ParseError("bad scalar \"" + std::string(whole) + "\""); };
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
    if (digits == 0) throw fail();
    if (pos < s.size()) {
        if (s[pos] != '/') throw fail();
        ++pos;
        size_t den_digits = 0;
        bool nonzero = false;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            nonzero |= s[pos] != '0';
            ++pos, ++den_digits;
        }
        if (den_digits == 0 || pos != s.size()) throw fail();
        if (!nonzero) throw fail();
    }
    std::string buf(s[0] == '+' ? s.substr(1) : s);
    mpq_class q(buf, 10);
    q.canonicalize();
    return q;
}

}  // namespace

QiScalar parse_qi(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty scalar");
    if (text.back() != 'i') return QiScalar(parse_rational(text, text), 0);

    size_t split = 0;
    for (size_t p = text.size(); p-- > 1;) {
        if (text[p] == '+' || text[p] == '-') {
            split = p;
            break;
        }
    }
    std::string_view re_part = text.substr(0, split);
    std::string_view im_part = text.substr(split, text.size() - split - 1);

    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
    mpq_class im;
    if (im_part.empty() || im_part == "+") {
        im = 1;
    } else if (im_part == "-") {
        im = -1;
    } else {
        if (im_part.back() != '*') throw ParseError("bad scalar \"" + std::string(text) + "\"");
        im_part.remove_suffix(1);
        im = parse_rational(im_part, text);
    }
    return QiScalar(re, im);
}

UnitCmp modulus_cmp_one(const QiScalar& x) {
    int c = cmp(x.norm(), 1);
    return c < 0 ? UnitCmp::less : (c == 0 ? UnitCmp::equal : UnitCmp::greater);
}

const char* to_string(UnitCmp c) {
    switch (c) {
        case UnitCmp::less: return "less";
        case UnitCmp::equal: return "equal";
        case UnitCmp::greater: return "greater";
    }
    return "";
}

}  // namespace jt
