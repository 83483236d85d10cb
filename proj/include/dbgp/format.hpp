#ifndef DBGP_FORMAT_HPP
#define DBGP_FORMAT_HPP

#include <string>
#include <vector>

namespace dbgp {

// Fixed-point rendering with 9 fractional digits; infinities become the
// tokens "inf" / "-inf". All serialized output goes through this so that
// identical inputs produce byte-identical files.
std::string fmt_real(double v);

// fmt_real, quoted when the value is non-finite so the result stays valid JSON.
std::string json_real(double v);

std::string json_quote(const std::string& s);

std::string join(const std::vector<std::string>& items, const std::string& sep);

} // namespace dbgp

#endif
