#pragma once

// Game configurations as words over the peg alphabet {0,...,k-1}, and the
// peg-pair move acting on them.  Letter p of a word is the peg holding disk
// p+1 (disks numbered by increasing size), so a move between pegs i and j
// flips the leftmost occurrence of i or j: the smallest disk on either peg
// is the one that moves.  Words are immutable; every operation is pure.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hanoi {

// Unordered peg pair, stored with i < j.
struct MoveLabel {
    int i;
    int j;

    MoveLabel(int i_, int j_) : i(i_), j(j_) {
        if (i_ < 0 || j_ <= i_)
            throw std::invalid_argument("MoveLabel: need 0 <= i < j");
    }
};

inline bool operator==(MoveLabel a, MoveLabel b) { return a.i == b.i && a.j == b.j; }

// The k(k-1)/2 move labels for alphabet size k, lexicographic.
std::vector<MoveLabel> all_moves(int k);

class Word {
public:
    // Word of given length over {0..k-1}; letters default to 0.
    Word(int k, std::vector<std::uint8_t> letters);
    static Word from_string(int k, const std::string& digits);
    // Word of length n whose base-k value is idx, first letter most significant.
    static Word from_index(int k, int n, std::uint64_t idx);

    int k() const { return k_; }
    int size() const { return static_cast<int>(letters_.size()); }
    std::uint8_t letter(int pos) const { return letters_[pos]; }
    const std::vector<std::uint8_t>& letters() const { return letters_; }

    std::uint64_t index() const;  // base-k value, first letter most significant
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.k_ == b.k_ && a.letters_ == b.letters_;
    }

private:
    int k_;
    std::vector<std::uint8_t> letters_;
};

// Flip the leftmost letter of w lying in {m.i, m.j}; fixed point if neither occurs.
Word apply_move(const Word& w, MoveLabel m);

// True iff w contains neither m.i nor m.j.
bool is_fixed(const Word& w, MoveLabel m);

// Disk-to-peg reading of a word: disk p+1 sits on peg letter(p); on each peg
// the disks are forced into size order, larger below.
struct DiskPlacement {
    int k = 0;
    std::vector<int> peg_of_disk;          // peg_of_disk[d] = peg of disk d+1
    std::vector<std::vector<int>> stacks;  // stacks[p] = disks on peg p, bottom to top
    std::string describe() const;
};

DiskPlacement configuration_of(const Word& w);

}  // namespace hanoi
