class Tally {
  int count = 0;
 public:
  void hit() {
    count++;
  }
  int value() {
    return count;
  }
};
