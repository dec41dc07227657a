#pragma once

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "opow/matrix.hpp"

namespace opow {

// Matrix text format: first token is the dimension n, followed by n*n
// whitespace-separated complex entries in row-major order.  An entry is one
// of  a  a+bi  a-bi  bi  with decimal reals and no interior spaces or
// parentheses.  Rendering uses 17 significant digits, so parse(render(M))
// reproduces M exactly.

namespace detail {

inline double parse_real(const std::string& s) {
    if (s.empty()) throw ParseError("empty numeric field");
    const char* begin = s.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end != begin + s.size()) throw ParseError("bad numeric field '" + s + "'");
    if (!std::isfinite(x)) throw ParseError("non-finite entry '" + s + "'");
    return x;
}

// The coefficient of i; "", "+", "-" denote the implicit 1.
inline double parse_imag_coeff(const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
}

}  // namespace detail

inline Complex parse_complex(const std::string& token) {
    if (token.empty()) throw ParseError("empty entry");
    if (token.back() != 'i' && token.back() != 'I')
        return {detail::parse_real(token), 0.0};

    const std::string body = token.substr(0, token.size() - 1);
    // Split before the last sign that is not an exponent sign and not leading.
    for (std::size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            const std::string re = body.substr(0, k);
            std::string im = body.substr(k);  // keeps the sign
            if (im == "+" || im == "-") im += "1";
            return {detail::parse_real(re), detail::parse_real(im)};
        }
    }
    return {0.0, detail::parse_imag_coeff(body)};
}

inline CMatrix parse_matrix(std::istream& in) {
    long n = 0;
    if (!(in >> n)) throw ParseError("missing dimension");
    if (n < 1 || n > 1024) throw ParseError("dimension out of range");
    CMatrix m(static_cast<int>(n));
    std::string token;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (!(in >> token)) throw ParseError("missing entries");
            m(static_cast<int>(i), static_cast<int>(j)) = parse_complex(token);
        }
    return m;
}

inline CMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

inline std::string render_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string render_complex(const Complex& z) {
    const double re = z.real(), im = z.imag();
    if (im == 0.0) return render_real(re);
    const std::string imi = render_real(im) + "i";
    if (re == 0.0) return imi;
    return im < 0.0 ? render_real(re) + imi : render_real(re) + "+" + imi;
}

inline void render_matrix(std::ostream& out, const CMatrix& m) {
    const int n = m.dim();
    out << n << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << render_complex(m(i, j));
        }
        out << '\n';
    }
}

inline std::string render_matrix(const CMatrix& m) {
    std::ostringstream out;
    render_matrix(out, m);
    return out.str();
}

}  // namespace opow
