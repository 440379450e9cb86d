#include <cstdio>
int main(){ std::puts("hnk"); }
