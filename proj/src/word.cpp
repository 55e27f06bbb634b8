#include "hanoi/word.hpp"

#include <sstream>

namespace hanoi {

std::vector<MoveLabel> all_moves(int k) {
    if (k < 3) throw std::invalid_argument("all_moves: k must be >= 3");
    std::vector<MoveLabel> moves;
    moves.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) moves.emplace_back(i, j);
    return moves;
}

Word::Word(int k, std::vector<std::uint8_t> letters) : k_(k), letters_(std::move(letters)) {
    if (k_ < 3) throw std::invalid_argument("Word: alphabet size must be >= 3");
    for (std::uint8_t x : letters_)
        if (x >= k_) throw std::invalid_argument("Word: letter out of alphabet");
}

Word Word::from_string(int k, const std::string& digits) {
    std::vector<std::uint8_t> letters;
    letters.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("Word: non-digit character");
        letters.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return Word(k, std::move(letters));
}

Word Word::from_index(int k, int n, std::uint64_t idx) {
    if (n < 0) throw std::invalid_argument("Word: negative length");
    std::vector<std::uint8_t> letters(static_cast<std::size_t>(n));
    for (int pos = n - 1; pos >= 0; --pos) {
        letters[pos] = static_cast<std::uint8_t>(idx % k);
        idx /= k;
    }
    if (idx != 0) throw std::invalid_argument("Word: index out of range for length");
    return Word(k, std::move(letters));
}

std::uint64_t Word::index() const {
    std::uint64_t v = 0;
    for (std::uint8_t x : letters_) v = v * k_ + x;
    return v;
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (std::uint8_t x : letters_) s.push_back(static_cast<char>('0' + x));
    return s;
}

namespace {
void check_move(const Word& w, MoveLabel m) {
    if (m.j >= w.k()) throw std::invalid_argument("move label: peg outside alphabet");
}
}  // namespace

Word apply_move(const Word& w, MoveLabel m) {
    check_move(w, m);
    std::vector<std::uint8_t> letters = w.letters();
    for (auto& x : letters) {
        if (x == m.i) {
            x = static_cast<std::uint8_t>(m.j);
            return Word(w.k(), std::move(letters));
        }
        if (x == m.j) {
            x = static_cast<std::uint8_t>(m.i);
            return Word(w.k(), std::move(letters));
        }
    }
    return w;  // neither peg occupied: fixed point
}

bool is_fixed(const Word& w, MoveLabel m) {
    check_move(w, m);
    for (std::uint8_t x : w.letters())
        if (x == m.i || x == m.j) return false;
    return true;
}

DiskPlacement configuration_of(const Word& w) {
    DiskPlacement p;
    p.k = w.k();
    p.peg_of_disk.resize(static_cast<std::size_t>(w.size()));
    p.stacks.resize(static_cast<std::size_t>(w.k()));
    for (int d = 0; d < w.size(); ++d) p.peg_of_disk[d] = w.letter(d);
    // Size order on a peg is forced: larger disks below, so fill big to small.
    for (int d = w.size() - 1; d >= 0; --d) p.stacks[p.peg_of_disk[d]].push_back(d + 1);
    return p;
}

std::string DiskPlacement::describe() const {
    std::ostringstream os;
    if (peg_of_disk.empty()) return "empty placement (0 disks)";
    for (std::size_t d = 0; d < peg_of_disk.size(); ++d) {
        if (d) os << ", ";
        os << "disk" << (d + 1) << "->peg" << peg_of_disk[d];
    }
    return os.str();
}

}  // namespace hanoi
