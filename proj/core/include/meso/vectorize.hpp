#pragma once

#include <map>
#include <string>
#include <vector>

#include "meso/corpus.hpp"

namespace meso {

/// Token counts aggregated over the clamped paragraph range
/// [center-delta, center+delta].
struct ParagraphWindow {
    int center = 0;
    int delta = 1;
    std::map<std::string, int> token_counts;
};

struct TfIdfModel {
    std::map<std::string, int> vocabulary; // lemma -> dense column index
    std::vector<int> doc_freq;             // indexed by column
    int n_docs = 0;
};

/// Sorted sparse vector, no explicit zeros.
struct SparseVector {
    std::vector<std::pair<int, double>> entries;

    double norm() const;
    bool empty() const { return entries.empty(); }
};

double dot(const SparseVector& u, const SparseVector& v);

/// dot(u,v)/(|u||v|), 0 when either norm is 0. All weights are
/// non-negative so the result lies in [0,1].
double cosine(const SparseVector& u, const SparseVector& v);

/// One window per paragraph index, boundary-clamped. Requires
/// delta >= 1 and more than 2*delta+1 paragraphs.
std::vector<ParagraphWindow> build_windows(const OrganizedText& o, int delta);

/// Fits document frequencies over the window set. Throws if the
/// vocabulary would be empty.
TfIdfModel fit_tfidf(const std::vector<ParagraphWindow>& windows);

/// weight(lemma) = tf * idf with tf the raw window count and
/// idf = ln((1+N)/(1+df)) + 1.
SparseVector vectorize_window(const ParagraphWindow& w, const TfIdfModel& m);

/// build_windows + fit_tfidf + vectorize_window over a whole book.
std::vector<SparseVector> vectorize_text(const OrganizedText& o, int delta);

} // namespace meso
