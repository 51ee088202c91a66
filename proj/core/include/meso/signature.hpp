#pragma once

#include <string>
#include <vector>

#include "meso/mesonet.hpp"

namespace meso {

/// Gap series between similarity-edge-bearing nodes along reading order.
struct RecurrenceSignature {
    std::string book_id;
    std::vector<int> gaps;
};

struct RsStats {
    double mean = 0.0;
    double std_dev = 0.0; // population
    bool empty = false;
};

/// Walks the nodes in index order with a counter that starts at 0: a node
/// with a similarity edge appends the counter and resets it; the counter
/// increments by 1 after every node. The trailing counter is discarded.
RecurrenceSignature recurrence_signature(const MesoNetwork& g);

/// Same algorithm on a raw incidence mask (tests and fixtures).
std::vector<int> recurrence_signature(const std::vector<bool>& similarity_incident);

RsStats rs_stats(const RecurrenceSignature& rs);
RsStats rs_stats(const std::vector<int>& gaps);

} // namespace meso
