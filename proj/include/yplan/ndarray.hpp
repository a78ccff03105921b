#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace yplan {

// Dense row-major N-dimensional array. Rank is fixed at construction.
template <typename T>
class NdArray {
 public:
  NdArray() = default;

  explicit NdArray(std::vector<int> dims, T fill = T{}) : dims_(std::move(dims)) {
    std::size_t n = 1;
    strides_.resize(dims_.size());
    for (int k = static_cast<int>(dims_.size()) - 1; k >= 0; --k) {
      assert(dims_[k] >= 0);
      strides_[k] = n;
      n *= static_cast<std::size_t>(dims_[k]);
    }
    data_.assign(n, fill);
  }

  template <typename... Ix>
  T& operator()(Ix... ix) {
    return data_[offset({static_cast<int>(ix)...})];
  }

  template <typename... Ix>
  const T& operator()(Ix... ix) const {
    return data_[offset({static_cast<int>(ix)...})];
  }

  const std::vector<int>& dims() const { return dims_; }
  int dim(int k) const { return dims_[static_cast<std::size_t>(k)]; }
  int rank() const { return static_cast<int>(dims_.size()); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::vector<T>& flat() { return data_; }
  const std::vector<T>& flat() const { return data_; }

  void fill(const T& v) { data_.assign(data_.size(), v); }

  friend bool operator==(const NdArray& a, const NdArray& b) {
    return a.dims_ == b.dims_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(std::initializer_list<int> ix) const {
    assert(ix.size() == dims_.size());
    std::size_t off = 0;
    int k = 0;
    for (int i : ix) {
      assert(i >= 0 && i < dims_[static_cast<std::size_t>(k)]);
      off += static_cast<std::size_t>(i) * strides_[static_cast<std::size_t>(k)];
      ++k;
    }
    return off;
  }

  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<T> data_;
};

}  // namespace yplan
