class Stats {
  int total = 0;
  int count = 1;
 public:
  double average() {
    return total / count;
  }
};
