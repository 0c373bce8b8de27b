class Buffer {
  int capacity = 16;
 public:
  int size() {
    return capacity;
  }
};
