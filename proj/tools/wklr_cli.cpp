#include "cli_main.hpp"
int main(int argc,char**argv){return wklr::cliMain(argc,argv);}
