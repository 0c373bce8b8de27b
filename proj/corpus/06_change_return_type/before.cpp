class Stats {
  int total = 0;
  int count = 1;
 public:
  int average() {
    return total / count;
  }
};
