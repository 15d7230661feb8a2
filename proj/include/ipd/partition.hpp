#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ipd {

// Weakly decreasing positive parts. The empty partition is allowed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("partition parts must be weakly decreasing and positive");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    long size() const {
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool operator==(const Partition&) const = default;

    // Largest i with lambda_i >= i+... not needed; conjugate is.
    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; !parts_.empty() && j <= parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    bool contains(const Partition& mu) const {
        for (std::size_t i = 0; i < mu.rows(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

private:
    std::vector<int> parts_;
};

// Strictly decreasing positive parts; indexes shifted Ferrers diagrams
// SD_lambda = {(i, i+j-1) : 1 <= i <= len, 1 <= j <= lambda_i}.
class StrictPartition {
public:
    StrictPartition() = default;

    explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] >= parts_[i - 1]))
                throw std::invalid_argument("strict partition parts must be strictly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool operator==(const StrictPartition&) const = default;

private:
    std::vector<int> parts_;
};

// Staircase (n-1, n-2, ..., 1).
inline Partition staircase(int n) {
    std::vector<int> p;
    for (int i = n - 1; i >= 1; --i) p.push_back(i);
    return Partition(std::move(p));
}

}  // namespace ipd
