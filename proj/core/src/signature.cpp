#include "meso/signature.hpp"

#include <cmath>

namespace meso {

std::vector<int> recurrence_signature(const std::vector<bool>& similarity_incident) {
    std::vector<int> gaps;
    int counter = 0;
    for (bool incident : similarity_incident) {
        if (incident) {
            gaps.push_back(counter);
            counter = 0;
        }
        counter++;
    }
    return gaps;
}

RecurrenceSignature recurrence_signature(const MesoNetwork& g) {
    RecurrenceSignature rs;
    rs.gaps = recurrence_signature(g.similarity_incident());
    return rs;
}

RsStats rs_stats(const std::vector<int>& gaps) {
    RsStats s;
    if (gaps.empty()) {
        s.empty = true;
        return s;
    }
    double sum = 0.0;
    for (int g : gaps) sum += g;
    s.mean = sum / static_cast<double>(gaps.size());
    double var = 0.0;
    for (int g : gaps) var += (g - s.mean) * (g - s.mean);
    s.std_dev = std::sqrt(var / static_cast<double>(gaps.size()));
    return s;
}

RsStats rs_stats(const RecurrenceSignature& rs) {
    return rs_stats(rs.gaps);
}

} // namespace meso
