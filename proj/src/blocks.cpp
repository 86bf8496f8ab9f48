#include "eigprog/blocks.hpp"

#include <algorithm>

#include "eigprog/errors.hpp"

namespace eigprog {

BlockKind BlockKind::soc(int n) {
    if (n < 1) throw ConfigError("soc block needs n >= 1");
    return BlockKind{Tag::Soc, 0, n};
}

BlockKind BlockKind::sym(int n) {
    if (n < 1) throw ConfigError("sym block needs n >= 1");
    return BlockKind{Tag::Sym, 0, n};
}

BlockKind BlockKind::rect(int m, int n) {
    if (m < 1 || n < 1) throw ConfigError("rect block needs m, n >= 1");
    return BlockKind{Tag::Rect, m, n};
}

int BlockKind::ambient_dim() const {
    switch (tag) {
        case Tag::Soc: return n + 1;
        case Tag::Sym: return n * n;
        case Tag::Rect: return rows * n;
    }
    return 0;
}

int BlockKind::intrinsic_dim() const {
    switch (tag) {
        case Tag::Soc: return n + 1;
        case Tag::Sym: return n * (n + 1) / 2;
        case Tag::Rect: return rows * n;
    }
    return 0;
}

int BlockKind::rank() const {
    switch (tag) {
        case Tag::Soc: return 2;
        case Tag::Sym: return n;
        case Tag::Rect: return std::min(rows, n);
    }
    return 0;
}

AlgebraDescriptor::AlgebraDescriptor(std::vector<BlockKind> blocks, Ordering ordering)
    : blocks_(std::move(blocks)), ordering_(ordering) {
    if (blocks_.empty()) throw ConfigError("algebra needs at least one block");
    if (ordering_ == Ordering::GloballyOrdered) {
        for (const BlockKind& b : blocks_) {
            if (!b.is_jordan())
                throw ConfigError(
                    "globally ordered eigenvalue maps require Jordan blocks only; "
                    "rectangular blocks force the block-wise ordering");
        }
    }
    offsets_.reserve(blocks_.size());
    eig_offsets_.reserve(blocks_.size());
    for (const BlockKind& b : blocks_) {
        offsets_.push_back(ambient_dim_);
        eig_offsets_.push_back(rank_);
        ambient_dim_ += b.ambient_dim();
        intrinsic_dim_ += b.intrinsic_dim();
        rank_ += b.rank();
    }
}

AlgebraPtr make_algebra(std::vector<BlockKind> blocks, Ordering ordering) {
    return std::make_shared<const AlgebraDescriptor>(std::move(blocks), ordering);
}

AlgebraPtr soc_algebra(int n) { return make_algebra({BlockKind::soc(n)}); }
AlgebraPtr sym_algebra(int n) { return make_algebra({BlockKind::sym(n)}); }
AlgebraPtr rect_algebra(int m, int n) { return make_algebra({BlockKind::rect(m, n)}); }

}  // namespace eigprog
