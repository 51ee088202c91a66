#include "meso/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meso {

double SparseVector::norm() const {
    double sq = 0.0;
    for (const auto& [idx, w] : entries) sq += w * w;
    return std::sqrt(sq);
}

double dot(const SparseVector& u, const SparseVector& v) {
    double sum = 0.0;
    auto a = u.entries.begin();
    auto b = v.entries.begin();
    while (a != u.entries.end() && b != v.entries.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            sum += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return sum;
}

double cosine(const SparseVector& u, const SparseVector& v) {
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return dot(u, v) / (nu * nv);
}

std::vector<ParagraphWindow> build_windows(const OrganizedText& o, int delta) {
    if (delta < 1) throw std::runtime_error("delta must be >= 1");
    const int n = static_cast<int>(o.paragraphs.size());
    if (n <= 2 * delta + 1)
        throw std::runtime_error(
            "book '" + o.book_id + "': " + std::to_string(n) +
            " paragraphs is too few for delta=" + std::to_string(delta) +
            " (need more than " + std::to_string(2 * delta + 1) + ")");
    std::vector<ParagraphWindow> windows(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) {
        ParagraphWindow& w = windows[static_cast<size_t>(i)];
        w.center = i;
        w.delta = delta;
        const int lo = std::max(0, i - delta);
        const int hi = std::min(n - 1, i + delta);
        for (int p = lo; p <= hi; p++)
            for (const Token& t : o.paragraphs[static_cast<size_t>(p)].tokens)
                w.token_counts[t.lemma]++;
    }
    return windows;
}

TfIdfModel fit_tfidf(const std::vector<ParagraphWindow>& windows) {
    TfIdfModel m;
    m.n_docs = static_cast<int>(windows.size());
    std::map<std::string, int> df;
    for (const ParagraphWindow& w : windows)
        for (const auto& [lemma, count] : w.token_counts) df[lemma]++;
    if (df.empty())
        throw std::runtime_error("empty vocabulary: no tokens in any window");
    int col = 0;
    for (const auto& [lemma, freq] : df) {
        m.vocabulary.emplace(lemma, col++);
        m.doc_freq.push_back(freq);
    }
    return m;
}

SparseVector vectorize_window(const ParagraphWindow& w, const TfIdfModel& m) {
    SparseVector v;
    v.entries.reserve(w.token_counts.size());
    for (const auto& [lemma, count] : w.token_counts) {
        auto it = m.vocabulary.find(lemma);
        if (it == m.vocabulary.end()) continue;
        const double idf =
            std::log((1.0 + m.n_docs) /
                     (1.0 + m.doc_freq[static_cast<size_t>(it->second)])) +
            1.0;
        v.entries.emplace_back(it->second, count * idf);
    }
    // Columns follow lemma order today, but don't rely on it.
    std::sort(v.entries.begin(), v.entries.end());
    return v;
}

std::vector<SparseVector> vectorize_text(const OrganizedText& o, int delta) {
    const auto windows = build_windows(o, delta);
    const TfIdfModel model = fit_tfidf(windows);
    std::vector<SparseVector> vectors;
    vectors.reserve(windows.size());
    for (const ParagraphWindow& w : windows)
        vectors.push_back(vectorize_window(w, model));
    return vectors;
}

} // namespace meso
