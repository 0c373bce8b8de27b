int combine(int a, int b) {
  int unused = 0;
  return a - b;
}
