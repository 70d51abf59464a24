#include "isingrep/edge_config.hpp"

#include <bit>
#include <stdexcept>

namespace isingrep {

EdgeConfig::EdgeConfig(int n_edges) : n_(n_edges), words_((n_edges + 63) / 64, 0) {
    if (n_edges < 0) throw std::invalid_argument("negative config length");
}

void EdgeConfig::set(int e, bool value) {
    std::uint64_t bit = std::uint64_t(1) << (e & 63);
    if (value)
        words_[e >> 6] |= bit;
    else
        words_[e >> 6] &= ~bit;
}

void EdgeConfig::clear() {
    for (auto& w : words_) w = 0;
}

int EdgeConfig::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool EdgeConfig::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

void EdgeConfig::check_same(const EdgeConfig& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("edge config length mismatch: " + std::to_string(n_) +
                                    " vs " + std::to_string(other.n_));
}

EdgeConfig& EdgeConfig::operator^=(const EdgeConfig& other) {
    check_same(other);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

EdgeConfig& EdgeConfig::operator&=(const EdgeConfig& other) {
    check_same(other);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

EdgeConfig& EdgeConfig::operator|=(const EdgeConfig& other) {
    check_same(other);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

int EdgeConfig::overlap(const EdgeConfig& other) const {
    check_same(other);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

std::uint64_t EdgeConfig::to_mask() const {
    if (n_ > 64) throw std::domain_error("config too long for a 64-bit mask");
    return words_.empty() ? 0 : words_[0];
}

EdgeConfig EdgeConfig::from_mask(int n_edges, std::uint64_t mask) {
    if (n_edges > 64) throw std::domain_error("config too long for a 64-bit mask");
    EdgeConfig c(n_edges);
    if (!c.words_.empty()) c.words_[0] = mask;
    return c;
}

std::string EdgeConfig::to_hex() const {
    static const char* digits = "0123456789abcdef";
    int n_digits = (n_ + 3) / 4;
    std::string s(n_digits, '0');
    for (int j = 0; j < n_digits; ++j) {
        int nibble = static_cast<int>((words_[j >> 4] >> ((j & 15) * 4)) & 0xf);
        s[j] = digits[nibble];
    }
    return s;
}

EdgeConfig EdgeConfig::from_hex(int n_edges, const std::string& hex) {
    EdgeConfig c(n_edges);
    int n_digits = (n_edges + 3) / 4;
    if (static_cast<int>(hex.size()) != n_digits)
        throw std::invalid_argument("hex config has wrong length");
    for (int j = 0; j < n_digits; ++j) {
        char ch = hex[j];
        int nibble;
        if (ch >= '0' && ch <= '9')
            nibble = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            nibble = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            nibble = ch - 'A' + 10;
        else
            throw std::invalid_argument("bad hex digit in config");
        c.words_[j >> 4] |= std::uint64_t(nibble) << ((j & 15) * 4);
    }
    for (int e = 4 * n_digits - 1; e >= n_edges; --e)
        if (c.test(e)) throw std::invalid_argument("hex config sets bits past the edge count");
    return c;
}

} // namespace isingrep
