#ifndef VDUAL_PROBLEM_HPP
#define VDUAL_PROBLEM_HPP

#include <map>
#include <string>
#include <vector>

#include "vdual/ideal.hpp"

namespace vdual {

// One `analyze` line: kind plus key=value parameters.
struct AnalysisRequest {
    std::string kind;
    std::map<std::string, std::string> params;
    int line = 0;
};

// Parsed problem file.  Line-oriented text format:
//   ring: z1 z2 z3 z4 weights 1 2 2 3
//   ideal JZ radical pure: z2^2 - z1^2*z3, z2*z3 - z1*z4
//   tuple f: z1, z3
//   analyze loci ideal=JZ
// '#' starts a comment; unknown keywords, keys, and variables are rejected
// with the offending line number.
struct ProblemFile {
    RingPtr ring;
    std::vector<std::pair<std::string, Ideal>> ideals;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> tuples;
    std::vector<AnalysisRequest> analyses;

    const Ideal* find_ideal(const std::string& name) const;
    const std::vector<Polynomial>* find_tuple(const std::string& name) const;
};

ProblemFile parse_problem(const std::string& text);
std::string print_problem(const ProblemFile& p);

bool operator==(const ProblemFile& a, const ProblemFile& b);

} // namespace vdual

#endif
