#include "meso/stemmer.hpp"

namespace meso {
namespace {

// Working buffer view over the word being stemmed. `end` is the index of the
// last live character; `suffix_start` marks where a candidate suffix begins
// (the stem for condition checks is word[0..suffix_start-1]).
struct Stem {
    std::string b;
    int end = -1;          // index of last character of the current word
    int suffix_start = -1; // index just past the candidate stem

    bool is_consonant(int i) const {
        switch (b[static_cast<size_t>(i)]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !is_consonant(i - 1);
            default:
                return true;
        }
    }

    // Measure m of the stem word[0..suffix_start-1]: the number of
    // vowel-consonant sequences in the [C](VC)^m[V] form.
    int measure() const {
        int n = 0;
        int i = 0;
        const int j = suffix_start - 1;
        while (true) {
            if (i > j) return n;
            if (!is_consonant(i)) break;
            i++;
        }
        i++;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (is_consonant(i)) break;
                i++;
            }
            i++;
            n++;
            while (true) {
                if (i > j) return n;
                if (!is_consonant(i)) break;
                i++;
            }
            i++;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i < suffix_start; i++)
            if (!is_consonant(i)) return true;
        return false;
    }

    bool double_consonant(int i) const {
        if (i < 1) return false;
        if (b[static_cast<size_t>(i)] != b[static_cast<size_t>(i - 1)]) return false;
        return is_consonant(i);
    }

    // cvc(i): word[i-2..i] is consonant-vowel-consonant and the final
    // consonant is not w, x or y. Used to detect the *o condition.
    bool cvc(int i) const {
        if (i < 2 || !is_consonant(i) || is_consonant(i - 1) || !is_consonant(i - 2))
            return false;
        const char c = b[static_cast<size_t>(i)];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(const char* s) {
        const int len = static_cast<int>(std::char_traits<char>::length(s));
        if (len > end + 1) return false;
        if (b.compare(static_cast<size_t>(end - len + 1), static_cast<size_t>(len), s) != 0)
            return false;
        suffix_start = end - len + 1;
        return true;
    }

    void set_to(const char* s) {
        const int len = static_cast<int>(std::char_traits<char>::length(s));
        b.replace(static_cast<size_t>(suffix_start), b.size(), s);
        end = suffix_start + len - 1;
    }

    void replace_if_measure(const char* s) {
        if (measure() > 0) set_to(s);
    }
};

void step1ab(Stem& w) {
    if (w.b[static_cast<size_t>(w.end)] == 's') {
        if (w.ends("sses")) {
            w.end -= 2;
        } else if (w.ends("ies")) {
            w.set_to("i");
        } else if (w.b[static_cast<size_t>(w.end - 1)] != 's') {
            w.end--;
        }
    }
    if (w.ends("eed")) {
        if (w.measure() > 0) w.end--;
    } else if ((w.ends("ed") || w.ends("ing")) && w.vowel_in_stem()) {
        w.end = w.suffix_start - 1;
        if (w.ends("at")) {
            w.set_to("ate");
        } else if (w.ends("bl")) {
            w.set_to("ble");
        } else if (w.ends("iz")) {
            w.set_to("ize");
        } else if (w.double_consonant(w.end)) {
            const char c = w.b[static_cast<size_t>(w.end)];
            if (c != 'l' && c != 's' && c != 'z') w.end--;
        } else {
            w.suffix_start = w.end + 1;
            if (w.measure() == 1 && w.cvc(w.end)) w.set_to("e");
        }
    }
}

void step1c(Stem& w) {
    if (w.ends("y") && w.vowel_in_stem())
        w.b[static_cast<size_t>(w.end)] = 'i';
}

void step2(Stem& w) {
    switch (w.b[static_cast<size_t>(w.end - 1)]) {
        case 'a':
            if (w.ends("ational")) { w.replace_if_measure("ate"); break; }
            if (w.ends("tional")) { w.replace_if_measure("tion"); break; }
            break;
        case 'c':
            if (w.ends("enci")) { w.replace_if_measure("ence"); break; }
            if (w.ends("anci")) { w.replace_if_measure("ance"); break; }
            break;
        case 'e':
            if (w.ends("izer")) { w.replace_if_measure("ize"); break; }
            break;
        case 'l':
            if (w.ends("abli")) { w.replace_if_measure("able"); break; }
            if (w.ends("alli")) { w.replace_if_measure("al"); break; }
            if (w.ends("entli")) { w.replace_if_measure("ent"); break; }
            if (w.ends("eli")) { w.replace_if_measure("e"); break; }
            if (w.ends("ousli")) { w.replace_if_measure("ous"); break; }
            break;
        case 'o':
            if (w.ends("ization")) { w.replace_if_measure("ize"); break; }
            if (w.ends("ation")) { w.replace_if_measure("ate"); break; }
            if (w.ends("ator")) { w.replace_if_measure("ate"); break; }
            break;
        case 's':
            if (w.ends("alism")) { w.replace_if_measure("al"); break; }
            if (w.ends("iveness")) { w.replace_if_measure("ive"); break; }
            if (w.ends("fulness")) { w.replace_if_measure("ful"); break; }
            if (w.ends("ousness")) { w.replace_if_measure("ous"); break; }
            break;
        case 't':
            if (w.ends("aliti")) { w.replace_if_measure("al"); break; }
            if (w.ends("iviti")) { w.replace_if_measure("ive"); break; }
            if (w.ends("biliti")) { w.replace_if_measure("ble"); break; }
            break;
        default:
            break;
    }
}

void step3(Stem& w) {
    switch (w.b[static_cast<size_t>(w.end)]) {
        case 'e':
            if (w.ends("icate")) { w.replace_if_measure("ic"); break; }
            if (w.ends("ative")) { w.replace_if_measure(""); break; }
            if (w.ends("alize")) { w.replace_if_measure("al"); break; }
            break;
        case 'i':
            if (w.ends("iciti")) { w.replace_if_measure("ic"); break; }
            break;
        case 'l':
            if (w.ends("ical")) { w.replace_if_measure("ic"); break; }
            if (w.ends("ful")) { w.replace_if_measure(""); break; }
            break;
        case 's':
            if (w.ends("ness")) { w.replace_if_measure(""); break; }
            break;
        default:
            break;
    }
}

void step4(Stem& w) {
    switch (w.b[static_cast<size_t>(w.end - 1)]) {
        case 'a':
            if (w.ends("al")) break;
            return;
        case 'c':
            if (w.ends("ance")) break;
            if (w.ends("ence")) break;
            return;
        case 'e':
            if (w.ends("er")) break;
            return;
        case 'i':
            if (w.ends("ic")) break;
            return;
        case 'l':
            if (w.ends("able")) break;
            if (w.ends("ible")) break;
            return;
        case 'n':
            if (w.ends("ant")) break;
            if (w.ends("ement")) break;
            if (w.ends("ment")) break;
            if (w.ends("ent")) break;
            return;
        case 'o':
            if (w.ends("ion") && w.suffix_start > 0 &&
                (w.b[static_cast<size_t>(w.suffix_start - 1)] == 's' ||
                 w.b[static_cast<size_t>(w.suffix_start - 1)] == 't'))
                break;
            if (w.ends("ou")) break;
            return;
        case 's':
            if (w.ends("ism")) break;
            return;
        case 't':
            if (w.ends("ate")) break;
            if (w.ends("iti")) break;
            return;
        case 'u':
            if (w.ends("ous")) break;
            return;
        case 'v':
            if (w.ends("ive")) break;
            return;
        case 'z':
            if (w.ends("ize")) break;
            return;
        default:
            return;
    }
    if (w.measure() > 1) w.end = w.suffix_start - 1;
}

void step5(Stem& w) {
    w.suffix_start = w.end + 1;
    if (w.b[static_cast<size_t>(w.end)] == 'e') {
        const int m = w.measure();
        if (m > 1 || (m == 1 && !w.cvc(w.end - 1))) w.end--;
    }
    if (w.b[static_cast<size_t>(w.end)] == 'l' && w.double_consonant(w.end) &&
        w.measure() > 1)
        w.end--;
}

} // namespace

std::string porter_stem(const std::string& word) {
    if (word.size() <= 2) return word;
    Stem w;
    w.b = word;
    w.end = static_cast<int>(word.size()) - 1;
    step1ab(w);
    if (w.end > 0) step1c(w);
    if (w.end > 0) step2(w);
    if (w.end > 0) step3(w);
    if (w.end > 0) step4(w);
    if (w.end > 0) step5(w);
    w.b.resize(static_cast<size_t>(w.end) + 1);
    return w.b;
}

} // namespace meso
