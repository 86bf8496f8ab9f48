#pragma once

#include <memory>
#include <vector>

namespace eigprog {

// How the eigenvalue map of a product algebra arranges its output.
//
//   BlockWise       — concatenation of the per-block spectra, each segment
//                     sorted descending on its own.
//   GloballyOrdered — all eigenvalues merged into one descending vector.
//                     Only available when every block is a Jordan block
//                     (second-order cone or symmetric); singular values of
//                     rectangular blocks do not mix with signed eigenvalues.
enum class Ordering { BlockWise, GloballyOrdered };

// One factor of a product algebra.
//
//   Soc(n)     second-order cone algebra on R^{n+1}; points are (x, t) with
//              x in R^n stored first and the scalar t last; rank 2.
//   Sym(n)     real symmetric n x n matrices under the trace inner product,
//              stored as the full matrix, row-major; rank n.
//   Rect(m,n)  general m x n matrices, row-major, mapped to their singular
//              values; rank min(m, n).
struct BlockKind {
    enum class Tag { Soc, Sym, Rect };

    Tag tag = Tag::Soc;
    int rows = 0;  // Rect only: m
    int n = 0;

    static BlockKind soc(int n);
    static BlockKind sym(int n);
    static BlockKind rect(int m, int n);

    // Number of scalars a block occupies in an element buffer.
    int ambient_dim() const;
    // Dimension of the block as a vector space (Sym: n(n+1)/2, not n^2).
    int intrinsic_dim() const;
    // Number of eigenvalues the block contributes.
    int rank() const;

    bool is_jordan() const { return tag != Tag::Rect; }
    bool operator==(const BlockKind&) const = default;
};

// Immutable description of a product algebra: the block list plus the
// ordering convention of its eigenvalue map. Shared by every element that
// lives in the algebra; safe to use from multiple threads.
class AlgebraDescriptor {
  public:
    AlgebraDescriptor(std::vector<BlockKind> blocks, Ordering ordering);

    const std::vector<BlockKind>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    Ordering ordering() const { return ordering_; }

    // Total scalars in an element buffer.
    int ambient_dim() const { return ambient_dim_; }
    // Sum of block vector-space dimensions.
    int intrinsic_dim() const { return intrinsic_dim_; }
    // Length of the eigenvalue vector.
    int rank() const { return rank_; }

    // Offset of block i inside an element buffer.
    int block_offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }
    // Offset of block i's segment inside a block-wise spectrum vector.
    int eig_offset(int i) const { return eig_offsets_[static_cast<std::size_t>(i)]; }

    bool operator==(const AlgebraDescriptor& other) const {
        return ordering_ == other.ordering_ && blocks_ == other.blocks_;
    }

  private:
    std::vector<BlockKind> blocks_;
    Ordering ordering_;
    std::vector<int> offsets_;
    std::vector<int> eig_offsets_;
    int ambient_dim_ = 0;
    int intrinsic_dim_ = 0;
    int rank_ = 0;
};

using AlgebraPtr = std::shared_ptr<const AlgebraDescriptor>;

AlgebraPtr make_algebra(std::vector<BlockKind> blocks,
                        Ordering ordering = Ordering::BlockWise);

// Single-block conveniences.
AlgebraPtr soc_algebra(int n);
AlgebraPtr sym_algebra(int n);
AlgebraPtr rect_algebra(int m, int n);

}  // namespace eigprog
