#include "dspipe/kappa.hpp"

#include <unordered_map>

namespace dspipe {

std::string interpret_kappa(double kappa) {
    if (kappa < 0.0) return "Less than chance agreement";
    if (kappa <= 0.20) return "Slight agreement";
    if (kappa <= 0.40) return "Fair agreement";
    if (kappa <= 0.60) return "Moderate agreement";
    if (kappa <= 0.80) return "Substantial agreement";
    return "Perfect agreement";
}

AgreementReport cohens_kappa(const std::vector<std::string>& labels_a,
                             const std::vector<std::string>& labels_b) {
    if (labels_a.size() != labels_b.size()) {
        throw InputError("label lists differ in length: " +
                         std::to_string(labels_a.size()) + " vs " +
                         std::to_string(labels_b.size()));
    }
    if (labels_a.empty()) throw InputError("label lists are empty");

    const long n = static_cast<long>(labels_a.size());
    long agree = 0;
    std::unordered_map<std::string, long> count_a, count_b;
    for (size_t i = 0; i < labels_a.size(); ++i) {
        if (labels_a[i] == labels_b[i]) ++agree;
        ++count_a[labels_a[i]];
        ++count_b[labels_b[i]];
    }
    // pe = sum_k pA(k)*pB(k); summing the integer products first keeps the
    // value independent of category iteration order
    long long chance_numerator = 0;
    for (const auto& [category, ca] : count_a) {
        auto it = count_b.find(category);
        if (it != count_b.end()) {
            chance_numerator += static_cast<long long>(ca) * it->second;
        }
    }

    AgreementReport report;
    report.n = n;
    report.po = static_cast<double>(agree) / static_cast<double>(n);
    report.pe = static_cast<double>(chance_numerator) /
                (static_cast<double>(n) * static_cast<double>(n));
    if (report.pe == 1.0) {
        // both raters used a single common category everywhere; po is 1
        report.kappa = 1.0;
    } else {
        report.kappa = (report.po - report.pe) / (1.0 - report.pe);
    }
    report.interpretation = interpret_kappa(report.kappa);
    return report;
}

} // namespace dspipe
