class Tally {
  int cnt = 0;
 public:
  void hit() {
    cnt++;
  }
  int value() {
    return cnt;
  }
};
