#pragma once

#include <string>
#include <vector>

#include "dspipe/errors.hpp"

namespace dspipe {

struct AgreementReport {
    long n = 0;
    double po = 0.0;    // observed agreement
    double pe = 0.0;    // chance agreement
    double kappa = 0.0; // (po - pe) / (1 - pe)
    std::string interpretation;
};

// Agreement band for a kappa value: 0.00-0.20 slight, 0.21-0.40 fair,
// 0.41-0.60 moderate, 0.61-0.80 substantial, 0.81-1.00 perfect; negative
// values read as less-than-chance.
std::string interpret_kappa(double kappa);

// Cohen's kappa between two equal-length label lists. Marginals are
// accumulated as integer counts so the result is bit-identical under any
// bijective renaming of categories. Throws InputError on empty or
// mismatched input.
AgreementReport cohens_kappa(const std::vector<std::string>& labels_a,
                             const std::vector<std::string>& labels_b);

} // namespace dspipe
