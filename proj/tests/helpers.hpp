#pragma once

#include <string_view>

#include "leibform/text.hpp"

namespace lf = leibform;

inline lf::PolyCoeff pc(std::string_view s, int n) { return lf::parse_coeff<lf::PolyCoeff>(s, n); }
inline lf::TrigCoeff tc(std::string_view s, int n) { return lf::parse_coeff<lf::TrigCoeff>(s, n); }
inline lf::Form<lf::PolyCoeff> pf(std::string_view s, int n) { return lf::parse_form<lf::PolyCoeff>(s, n); }
inline lf::MultiVec<lf::PolyCoeff> pv(std::string_view s, int n) { return lf::parse_multivec<lf::PolyCoeff>(s, n); }
inline lf::Form<lf::TrigCoeff> tf(std::string_view s, int n) { return lf::parse_form<lf::TrigCoeff>(s, n); }
inline lf::MultiVec<lf::TrigCoeff> tv(std::string_view s, int n) { return lf::parse_multivec<lf::TrigCoeff>(s, n); }

inline lf::MultiIndex mi(std::initializer_list<int> v) {
    lf::MultiIndex m{};
    std::size_t i = 0;
    for (int x : v) m[i++] = x;
    return m;
}
