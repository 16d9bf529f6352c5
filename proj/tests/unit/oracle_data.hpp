// Generated by tests/oracles/oracles.py. Do not edit.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Chern forms of the projective tangent rep, serialized; key (n, k).
inline const std::map<std::pair<int, int>, std::string> projective_chern = {
    {{1, 1}, R"([[["w1","wb1"],1,"-2"]])"},
    {{2, 1}, R"([[["w1","wb1"],1,"-3"],[["w2","wb2"],1,"-3"]])"},
    {{2, 2}, R"([[["w1","w2","wb1","wb2"],2,"-6"]])"},
    {{3, 1}, R"([[["w1","wb1"],1,"-4"],[["w2","wb2"],1,"-4"],[["w3","wb3"],1,"-4"]])"},
    {{3, 2}, R"([[["w1","w2","wb1","wb2"],2,"-12"],[["w1","w3","wb1","wb3"],2,"-12"],[["w2","w3","wb2","wb3"],2,"-12"]])"},
    {{3, 3}, R"([[["w1","w2","w3","wb1","wb2","wb3"],3,"24"]])"},
};

// Weight of f(M, (M^M)^j, A^(k-1-j)) in the transgression, from the homotopy integral.
inline const std::map<int, std::vector<std::string>> cs_weights = {
    {1, {"1"}},
    {2, {"1", "-1/3"}},
    {3, {"1", "-1/2", "1/10"}},
    {4, {"1", "-3/5", "1/5", "-1/35"}},
    {5, {"1", "-2/3", "2/7", "-1/14", "1/126"}},
    {6, {"1", "-5/7", "5/14", "-5/42", "1/42", "-1/462"}},
};

inline const std::map<int, std::vector<std::string>> conformal = {
    {1, {"1"}},
    {2, {"2", "2"}},
    {3, {"3", "4", "2"}},
    {4, {"4", "7", "6", "3"}},
    {5, {"5", "11", "13", "9", "3"}},
    {6, {"6", "16", "24", "22", "12", "4"}},
    {7, {"7", "22", "40", "46", "34", "16", "4"}},
    {8, {"8", "29", "62", "86", "80", "50", "20", "5"}},
};

// Todd polynomials: (coefficient, exponents of c1..c4).
inline const std::vector<std::vector<std::pair<std::string, std::vector<int>>>> todd = {
    {{"1/2", {1,0,0,0}}},
    {{"1/12", {0,1,0,0}}, {"1/12", {2,0,0,0}}},
    {{"1/24", {1,1,0,0}}},
    {{"-1/720", {0,0,0,1}}, {"1/240", {0,2,0,0}}, {"1/720", {1,0,1,0}}, {"1/180", {2,1,0,0}}, {"-1/720", {4,0,0,0}}},
};

}  // namespace oracle
