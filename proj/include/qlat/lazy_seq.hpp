#ifndef QLAT_LAZY_SEQ_HPP
#define QLAT_LAZY_SEQ_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

namespace qlat {

/* Memoized pull-stream.  The producer is called once per index, in order, and
   every computed item is cached, so a stream is replayable: at(i) returns the
   same value no matter how many consumers pulled before, and concurrent
   consumers are serialized through the mutex.  Copying the handle shares the
   cache. */
template <class T>
class LazySeq {
public:
  explicit LazySeq(std::function<T()> producer)
      : st_(std::make_shared<State>()) {
    st_->next = std::move(producer);
  }

  T at(std::size_t i) const {
    std::lock_guard<std::mutex> lock(st_->m);
    while (st_->memo.size() <= i) st_->memo.push_back(st_->next());
    return st_->memo[i];
  }

  std::size_t computed() const {
    std::lock_guard<std::mutex> lock(st_->m);
    return st_->memo.size();
  }

private:
  struct State {
    std::mutex m;
    std::vector<T> memo;
    std::function<T()> next;
  };
  std::shared_ptr<State> st_;
};

} // namespace qlat

#endif
