#include <vector>

class Counter {
 public:
  int countPositive(const std::vector<int>& values) {
    long count = 0;
    for (int v : values) {
      if (v > 0) {
        count++;
      }
    }
    return count;
  }
};
