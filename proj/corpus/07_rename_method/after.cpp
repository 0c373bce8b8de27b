class Rectangle {
  int width = 0;
  int height = 0;
 public:
  int computeArea() {
    int result = width * height;
    return result;
  }
  int doubledArea() {
    return computeArea() * 2;
  }
};
