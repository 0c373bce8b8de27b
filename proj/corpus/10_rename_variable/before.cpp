#include <vector>

class Summer {
 public:
  int sumAll(const std::vector<int>& values) {
    int s = 0;
    for (int v : values) {
      s += v;
    }
    return s;
  }
};
