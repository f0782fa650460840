#pragma once

#include <initializer_list>
#include <string>

#include "jt/linalg.hpp"
#include "jt/qi.hpp"

namespace jt::test {

inline QiScalar q(const char* text) { return parse_qi(text); }

// Row-major literal; entries in the QiScalar text form.
inline Mat mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    Mat m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (const char* e : row) m(i, j++) = parse_qi(e);
        ++i;
    }
    return m;
}

inline Mat diag(std::initializer_list<const char*> entries) {
    const Index n = static_cast<Index>(entries.size());
    Mat m = Mat::Zero(n, n);
    Index i = 0;
    for (const char* e : entries) m(i, i) = parse_qi(e), ++i;
    return m;
}

inline Mat eye(Index n) { return Mat::Identity(n, n); }

}  // namespace jt::test
