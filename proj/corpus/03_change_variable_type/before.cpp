#include <vector>

class Counter {
 public:
  int countPositive(const std::vector<int>& values) {
    int count = 0;
    for (int v : values) {
      if (v > 0) {
        count++;
      }
    }
    return count;
  }
};
