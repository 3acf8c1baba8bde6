#pragma once

#include "urlevi/weyl.hpp"

#include <string>

namespace urlevi {

// letters a, b for rank <= 2, otherwise a1 .. an
std::string simple_letter(const RootSystem& rs, int i);
std::string root_name(const RootSystem& rs, int r);        // "2a+b", "-a-b"
std::string base_name(const RootSystem& rs, const Vec& b);  // "{a,a+b}", "{}"
std::string word_name(const WeylGroup& W, int w);           // "1", "w_a w_b"

int parse_root(const RootSystem& rs, const std::string& text);
// "{}", "{a,a+b}", "D" for the simple roots
Vec parse_base(const RootSystem& rs, const std::string& text);
// products of "1", "w_a", "w_{2a+b}", "c", "c^2", separated by spaces
int parse_element(const WeylGroup& W, const std::string& text);

}  // namespace urlevi
