class Rectangle {
  int width = 0;
  int height = 0;
 public:
  int area() {
    int result = width * height;
    return result;
  }
  int doubledArea() {
    return area() * 2;
  }
};
